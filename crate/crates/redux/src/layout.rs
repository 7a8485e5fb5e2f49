//! Structured variable names and variable layouts.
//!
//! A name is a family tag plus numeric indices (`alpha.0`, `beta.3.1.2`,
//! `x.1`, or a bare `alpha`). A layout is an ordered list of unique names;
//! exponent vectors align with the layout order.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VarName {
    family: String,
    indices: Vec<u32>,
}

impl VarName {
    pub fn new(family: impl Into<String>, indices: impl Into<Vec<u32>>) -> Self {
        let family = family.into();
        debug_assert!(is_valid_family(&family), "bad family `{family}`");
        VarName {
            family,
            indices: indices.into(),
        }
    }

    pub fn bare(family: impl Into<String>) -> Self {
        Self::new(family, Vec::new())
    }

    pub fn family(&self) -> &str {
        &self.family
    }

    pub fn indices(&self) -> &[u32] {
        &self.indices
    }
}

fn is_valid_family(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl fmt::Display for VarName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.family)?;
        for ix in &self.indices {
            write!(f, ".{}", ix)?;
        }
        Ok(())
    }
}

impl FromStr for VarName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut parts = s.split('.');
        let family = parts.next().unwrap_or("");
        if !is_valid_family(family) {
            return Err(Error::BadVarName(s.to_string()));
        }
        let mut indices = Vec::new();
        for p in parts {
            let ix: u32 = p.parse().map_err(|_| Error::BadVarName(s.to_string()))?;
            indices.push(ix);
        }
        Ok(VarName {
            family: family.to_string(),
            indices,
        })
    }
}

/// An ordered list of unique variable names with position lookup.
#[derive(Debug)]
pub struct VariableLayout {
    names: Vec<VarName>,
    index: HashMap<VarName, usize>,
}

impl PartialEq for VariableLayout {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names
    }
}
impl Eq for VariableLayout {}

pub type Layout = Arc<VariableLayout>;

impl VariableLayout {
    pub fn new(names: Vec<VarName>) -> Result<Layout> {
        let mut index = HashMap::with_capacity(names.len());
        for (i, n) in names.iter().enumerate() {
            if index.insert(n.clone(), i).is_some() {
                return Err(Error::DuplicateVariable(n.to_string()));
            }
        }
        Ok(Arc::new(VariableLayout { names, index }))
    }

    pub fn parse(names: &[&str]) -> Result<Layout> {
        Self::new(names.iter().map(|s| s.parse()).collect::<Result<_>>()?)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[VarName] {
        &self.names
    }

    pub fn name(&self, pos: usize) -> &VarName {
        &self.names[pos]
    }

    pub fn position(&self, name: &VarName) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn require(&self, name: &VarName) -> Result<usize> {
        self.position(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    pub fn contains(&self, name: &VarName) -> bool {
        self.index.contains_key(name)
    }

    /// A family tag not used by any variable in this layout; `base` if free,
    /// otherwise `base_2`, `base_3`, ...
    pub fn fresh_family(&self, base: &str) -> String {
        let used: std::collections::HashSet<&str> =
            self.names.iter().map(|n| n.family()).collect();
        if !used.contains(base) {
            return base.to_string();
        }
        for k in 2u32.. {
            let cand = format!("{base}_{k}");
            if !used.contains(cand.as_str()) {
                return cand;
            }
        }
        unreachable!()
    }

    /// A new layout with `extra` appended.
    pub fn extend(&self, extra: &[VarName]) -> Result<Layout> {
        let mut names = self.names.clone();
        names.extend_from_slice(extra);
        Self::new(names)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_roundtrip() {
        for s in ["alpha.0", "beta.3.1.2", "x.1", "alpha", "y1.7"] {
            let v: VarName = s.parse().unwrap();
            assert_eq!(v.to_string(), s);
        }
        assert!("0.1".parse::<VarName>().is_err());
        assert!("".parse::<VarName>().is_err());
        assert!("x.y".parse::<VarName>().is_err());
    }

    #[test]
    fn layout_uniqueness_and_lookup() {
        let l = VariableLayout::parse(&["x.1", "x.2", "w.1"]).unwrap();
        assert_eq!(l.len(), 3);
        assert_eq!(l.position(&"x.2".parse().unwrap()), Some(1));
        assert!(VariableLayout::parse(&["x.1", "x.1"]).is_err());
    }

    #[test]
    fn fresh_family_skips_used_tags() {
        let l = VariableLayout::parse(&["t.1", "s"]).unwrap();
        assert_eq!(l.fresh_family("t"), "t_2");
        assert_eq!(l.fresh_family("s"), "s_2");
        assert_eq!(l.fresh_family("u"), "u");
    }
}
