//! The on-disk JSON formats shared by the CLI and the artifact files.
//!
//! A polynomial document is
//! `{ "field": {"kind":"prime","p":67} | {"kind":"rationals"},
//!    "vars": ["alpha.0", "x.1", ...],
//!    "terms": [ {"coeff": "-3/2", "exps": [2, 0, ...]} ] }`
//! with coefficients as decimal strings (rationals as `"num/den"`) and
//! exponents aligned with `vars`. Systems replace `terms` by `polys`, a list
//! of term lists. Vectors are arrays of coefficient strings aligned with a
//! layout; matrices are row-major arrays of rows.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{CoefficientField, Scalar};
use crate::layout::{Layout, VariableLayout};
use crate::poly::{Monomial, PolySystem, Polynomial};

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FieldJson {
    Prime { p: u64 },
    Rationals,
}

impl FieldJson {
    pub fn to_field(&self) -> Result<CoefficientField> {
        match self {
            FieldJson::Prime { p } => CoefficientField::prime(*p),
            FieldJson::Rationals => Ok(CoefficientField::Rationals),
        }
    }

    pub fn of_field(f: &CoefficientField) -> Result<FieldJson> {
        match f {
            CoefficientField::Prime(p) => Ok(FieldJson::Prime {
                p: f
                    .modulus_u64()
                    .ok_or_else(|| Error::InvalidInput(format!("prime {p} exceeds u64")))?,
            }),
            CoefficientField::Rationals => Ok(FieldJson::Rationals),
        }
    }
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct TermJson {
    pub coeff: String,
    pub exps: Vec<u32>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct PolyJson {
    pub field: FieldJson,
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct SystemJson {
    pub field: FieldJson,
    pub vars: Vec<String>,
    pub polys: Vec<Vec<TermJson>>,
}

pub fn layout_to_vars(layout: &Layout) -> Vec<String> {
    layout.names().iter().map(|n| n.to_string()).collect()
}

pub fn vars_to_layout(vars: &[String]) -> Result<Layout> {
    VariableLayout::new(vars.iter().map(|s| s.parse()).collect::<Result<_>>()?)
}

pub fn terms_of_poly(p: &Polynomial) -> Vec<TermJson> {
    p.terms()
        .map(|(m, c)| TermJson {
            coeff: c.to_string(),
            exps: m.exps().to_vec(),
        })
        .collect()
}

pub fn poly_from_terms(
    field: &CoefficientField,
    layout: &Layout,
    terms: &[TermJson],
) -> Result<Polynomial> {
    Polynomial::from_terms(
        field.clone(),
        layout.clone(),
        terms
            .iter()
            .map(|t| Ok((Monomial::new(t.exps.clone()), field.parse(&t.coeff)?)))
            .collect::<Result<Vec<_>>>()?,
    )
}

impl PolyJson {
    pub fn of_poly(p: &Polynomial) -> Result<Self> {
        Ok(PolyJson {
            field: FieldJson::of_field(p.field())?,
            vars: layout_to_vars(p.layout()),
            terms: terms_of_poly(p),
        })
    }

    pub fn to_poly(&self) -> Result<Polynomial> {
        let field = self.field.to_field()?;
        let layout = vars_to_layout(&self.vars)?;
        poly_from_terms(&field, &layout, &self.terms)
    }
}

impl SystemJson {
    pub fn of_system(s: &PolySystem) -> Result<Self> {
        Ok(SystemJson {
            field: FieldJson::of_field(s.field())?,
            vars: layout_to_vars(s.layout()),
            polys: s.polys().iter().map(terms_of_poly).collect(),
        })
    }

    pub fn to_system(&self) -> Result<PolySystem> {
        let field = self.field.to_field()?;
        let layout = vars_to_layout(&self.vars)?;
        let polys = self
            .polys
            .iter()
            .map(|t| poly_from_terms(&field, &layout, t))
            .collect::<Result<Vec<_>>>()?;
        PolySystem::new(field, layout, polys)
    }
}

/// Parses a vector of coefficient strings against a field.
pub fn parse_vector(field: &CoefficientField, values: &[String]) -> Result<Vec<Scalar>> {
    values.iter().map(|v| field.parse(v)).collect()
}

pub fn vector_to_strings(values: &[Scalar]) -> Vec<String> {
    values.iter().map(|v| v.to_string()).collect()
}

/// Parses a row-major matrix of coefficient strings.
pub fn parse_matrix(field: &CoefficientField, rows: &[Vec<String>]) -> Result<Vec<Vec<Scalar>>> {
    rows.iter().map(|r| parse_vector(field, r)).collect()
}

pub fn matrix_to_strings(rows: &[Vec<Scalar>]) -> Vec<Vec<String>> {
    rows.iter().map(|r| vector_to_strings(r)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poly_document_roundtrip() {
        let doc = r#"{
            "field": {"kind": "prime", "p": 67},
            "vars": ["x.1", "x.2"],
            "terms": [
                {"coeff": "1", "exps": [2, 0]},
                {"coeff": "-1", "exps": [0, 0]}
            ]
        }"#;
        let pj: PolyJson = serde_json::from_str(doc).unwrap();
        let p = pj.to_poly().unwrap();
        assert_eq!(p.monomial_count(), 2);
        let back = PolyJson::of_poly(&p).unwrap();
        let p2 = back.to_poly().unwrap();
        assert_eq!(p, p2);
        // canonical representative of -1 mod 67
        assert!(back.terms.iter().any(|t| t.coeff == "66"));
    }

    #[test]
    fn rational_system_roundtrip() {
        let doc = r#"{
            "field": {"kind": "rationals"},
            "vars": ["x.1"],
            "polys": [
                [{"coeff": "-3/2", "exps": [1]}, {"coeff": "1", "exps": [0]}],
                []
            ]
        }"#;
        let sj: SystemJson = serde_json::from_str(doc).unwrap();
        let s = sj.to_system().unwrap();
        assert_eq!(s.len(), 2);
        assert!(s.polys()[1].is_zero());
        let back = SystemJson::of_system(&s).unwrap();
        assert_eq!(serde_json::to_string(&back).unwrap().contains("-3/2"), true);
    }
}
