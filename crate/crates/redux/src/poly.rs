//! Sparse multivariate polynomials in canonical form.
//!
//! Terms are kept in a `BTreeMap` keyed by monomials in graded-lex order
//! (total degree first, then lexicographic on the exponent vector), with no
//! zero coefficients stored. Two equal polynomials therefore have identical
//! term maps, and serialization order is deterministic.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::field::{CoefficientField, Scalar};
use crate::layout::{Layout, VarName};

/// An exponent vector aligned with a layout, with cached total degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
    degree: u32,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        let degree = exps.iter().sum();
        Monomial { exps, degree }
    }

    pub fn one(len: usize) -> Self {
        Monomial {
            exps: vec![0; len],
            degree: 0,
        }
    }

    pub fn var(len: usize, pos: usize) -> Self {
        let mut exps = vec![0; len];
        exps[pos] = 1;
        Monomial { exps, degree: 1 }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exp(&self, pos: usize) -> u32 {
        self.exps[pos]
    }

    pub fn is_constant(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a + b)
            .collect();
        Monomial {
            exps,
            degree: self.degree + other.degree,
        }
    }

    /// Total degree counted over a subset of positions.
    pub fn degree_on(&self, positions: &[usize]) -> u32 {
        positions.iter().map(|&p| self.exps[p]).sum()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    field: CoefficientField,
    layout: Layout,
    terms: BTreeMap<Monomial, Scalar>,
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial[{} | {}]", self.field, self)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}", c)?;
            for (pos, &e) in m.exps().iter().enumerate() {
                if e == 1 {
                    write!(f, "*{}", self.layout.name(pos))?;
                } else if e > 1 {
                    write!(f, "*{}^{}", self.layout.name(pos), e)?;
                }
            }
        }
        Ok(())
    }
}

impl Polynomial {
    pub fn zero(field: CoefficientField, layout: Layout) -> Self {
        Polynomial {
            field,
            layout,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(field: CoefficientField, layout: Layout, value: Scalar) -> Self {
        let mut p = Self::zero(field, layout);
        if !value.is_zero() {
            p.terms.insert(Monomial::one(p.layout.len()), value);
        }
        p
    }

    pub fn var(field: CoefficientField, layout: Layout, name: &VarName) -> Result<Self> {
        let pos = layout.require(name)?;
        let one = field.one();
        let mut p = Self::zero(field, layout);
        p.terms.insert(Monomial::var(p.layout.len(), pos), one);
        Ok(p)
    }

    /// Builds a polynomial from raw terms, summing duplicates and dropping
    /// zeros. Every exponent vector must have the layout's length.
    pub fn from_terms<I>(field: CoefficientField, layout: Layout, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, Scalar)>,
    {
        let mut p = Self::zero(field, layout);
        for (m, c) in terms {
            if m.exps().len() != p.layout.len() {
                return Err(Error::LayoutMismatch(format!(
                    "exponent vector of length {} in a layout of size {}",
                    m.exps().len(),
                    p.layout.len()
                )));
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = self.field.add(e.get(), &c);
                if s.is_zero() {
                    e.remove();
                } else {
                    e.insert(s);
                }
            }
        }
    }

    pub fn field(&self) -> &CoefficientField {
        &self.field
    }

    pub fn layout(&self) -> &Layout {
        &self.layout
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    /// Number of stored terms; defines the sparse-shift comparisons.
    pub fn monomial_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; 0 for the zero polynomial.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Some(d) if nonzero and every monomial has total degree d.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys();
        let d = it.next()?.degree();
        it.all(|m| m.degree() == d).then_some(d)
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn constant_term(&self) -> Scalar {
        self.coeff(&Monomial::one(self.layout.len()))
    }

    fn same_context(&self, other: &Polynomial) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.layout != other.layout {
            return Err(Error::LayoutMismatch(
                "operands use different variable layouts".into(),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_context(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Polynomial {
        let mut out = Self::zero(self.field.clone(), self.layout.clone());
        for (m, c) in &self.terms {
            out.terms.insert(m.clone(), self.field.neg(c));
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> Polynomial {
        let mut out = Self::zero(self.field.clone(), self.layout.clone());
        if s.is_zero() {
            return out;
        }
        for (m, c) in &self.terms {
            let v = self.field.mul(c, s);
            if !v.is_zero() {
                out.terms.insert(m.clone(), v);
            }
        }
        out
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_context(other)?;
        let mut out = Self::zero(self.field.clone(), self.layout.clone());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), self.field.mul(ca, cb));
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Self::constant(self.field.clone(), self.layout.clone(), self.field.one());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("same context");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("same context");
            }
        }
        acc
    }

    pub fn evaluate(&self, point: &[Scalar]) -> Result<Scalar> {
        if point.len() != self.layout.len() {
            return Err(Error::ArityMismatch {
                expected: self.layout.len(),
                got: point.len(),
            });
        }
        let mut acc = self.field.zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (pos, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    v = self.field.mul(&v, &self.field.pow(&point[pos], e));
                }
            }
            acc = self.field.add(&acc, &v);
        }
        Ok(acc)
    }

    /// p(x + offset), exact. The number of stored terms of the result is what
    /// sparse-shift questions compare.
    pub fn shift_substitute(&self, offset: &[Scalar]) -> Result<Polynomial> {
        if offset.len() != self.layout.len() {
            return Err(Error::ArityMismatch {
                expected: self.layout.len(),
                got: offset.len(),
            });
        }
        let len = self.layout.len();
        let mut out = Self::zero(self.field.clone(), self.layout.clone());
        for (m, c) in &self.terms {
            // Expand c * prod_i (x_i + a_i)^{e_i}, skipping zero offsets.
            let mut expanded: Vec<(Monomial, Scalar)> = vec![(Monomial::one(len), c.clone())];
            for (pos, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let a = &offset[pos];
                if a.is_zero() {
                    for (mm, _) in expanded.iter_mut() {
                        let mut exps = mm.exps().to_vec();
                        exps[pos] += e;
                        *mm = Monomial::new(exps);
                    }
                    continue;
                }
                let binom = binomial_row(e);
                let mut next = Vec::with_capacity(expanded.len() * (e as usize + 1));
                for (mm, cc) in &expanded {
                    let mut a_pow = self.field.one();
                    for k in 0..=e {
                        // term: C(e, k) * a^k * x^{e-k}
                        let coef = self.field.from_bigint(&binom[k as usize].clone().into());
                        let coef = self.field.mul(&self.field.mul(cc, &coef), &a_pow);
                        if !coef.is_zero() {
                            let mut exps = mm.exps().to_vec();
                            exps[pos] += e - k;
                            next.push((Monomial::new(exps), coef));
                        }
                        if k < e {
                            a_pow = self.field.mul(&a_pow, a);
                        }
                    }
                }
                expanded = next;
            }
            for (mm, cc) in expanded {
                out.add_term(mm, cc);
            }
        }
        Ok(out)
    }

    /// p(forms): exact composition, one affine (degree <= 1) form per source
    /// variable. All forms must share one layout and field.
    pub fn affine_substitute(&self, forms: &[Polynomial]) -> Result<Polynomial> {
        if forms.len() != self.layout.len() {
            return Err(Error::ArityMismatch {
                expected: self.layout.len(),
                got: forms.len(),
            });
        }
        let (field, target) = match forms.first() {
            Some(f) => (f.field.clone(), f.layout.clone()),
            // A polynomial over the empty layout is a constant; re-express it
            // over the empty layout unchanged.
            None => (self.field.clone(), self.layout.clone()),
        };
        if field != self.field {
            return Err(Error::FieldMismatch);
        }
        for f in forms {
            if f.field != field || f.layout != target {
                return Err(Error::LayoutMismatch(
                    "substitution forms disagree on layout or field".into(),
                ));
            }
            if f.degree() > 1 {
                return Err(Error::DegreeViolation(format!(
                    "substitution form has degree {} > 1",
                    f.degree()
                )));
            }
        }
        let mut out = Self::zero(field.clone(), target.clone());
        for (m, c) in &self.terms {
            let mut prod = Self::constant(field.clone(), target.clone(), c.clone());
            for (pos, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    prod = prod.mul(&forms[pos].pow(e))?;
                }
            }
            out = out.add(&prod)?;
        }
        Ok(out)
    }

    /// Evaluates one variable at a constant, keeping the layout.
    pub fn set_var(&self, name: &VarName, value: &Scalar) -> Result<Polynomial> {
        let pos = self.layout.require(name)?;
        let mut out = Self::zero(self.field.clone(), self.layout.clone());
        for (m, c) in &self.terms {
            let e = m.exp(pos);
            let coef = if e == 0 {
                c.clone()
            } else {
                self.field.mul(c, &self.field.pow(value, e))
            };
            if coef.is_zero() {
                continue;
            }
            let mut exps = m.exps().to_vec();
            exps[pos] = 0;
            out.add_term(Monomial::new(exps), coef);
        }
        Ok(out)
    }

    /// Formal partial derivative with respect to one variable.
    pub fn partial_derivative(&self, name: &VarName) -> Result<Polynomial> {
        let pos = self.layout.require(name)?;
        let mut out = Self::zero(self.field.clone(), self.layout.clone());
        for (m, c) in &self.terms {
            let e = m.exp(pos);
            if e == 0 {
                continue;
            }
            let mut exps = m.exps().to_vec();
            exps[pos] = e - 1;
            let coef = self.field.mul(c, &self.field.from_int(e as i64));
            out.add_term(Monomial::new(exps), coef);
        }
        Ok(out)
    }

    /// Re-expresses this polynomial over a superlayout, mapping variables by
    /// name. Every variable of the current layout must exist in `new_layout`.
    pub fn embed(&self, new_layout: &Layout) -> Result<Polynomial> {
        let map: Vec<usize> = self
            .layout
            .names()
            .iter()
            .map(|n| new_layout.require(n))
            .collect::<Result<_>>()?;
        let mut out = Self::zero(self.field.clone(), new_layout.clone());
        for (m, c) in &self.terms {
            let mut exps = vec![0u32; new_layout.len()];
            for (pos, &e) in m.exps().iter().enumerate() {
                exps[map[pos]] = e;
            }
            out.terms.insert(Monomial::new(exps), c.clone());
        }
        Ok(out)
    }

    /// Bipartite homogenization: each monomial is multiplied by
    /// `hvar_a^(2 - deg_A)` and `hvar_b^(2 - deg_B)`. The input must be
    /// semi-biquadratic with respect to (part_a, part_b), and the two
    /// homogenizer variables must already be in the layout, unused.
    pub fn homogenize_bipartite(
        &self,
        part_a: &[VarName],
        part_b: &[VarName],
        hvar_a: &VarName,
        hvar_b: &VarName,
    ) -> Result<Polynomial> {
        let pos_a: Vec<usize> = part_a
            .iter()
            .map(|n| self.layout.require(n))
            .collect::<Result<_>>()?;
        let pos_b: Vec<usize> = part_b
            .iter()
            .map(|n| self.layout.require(n))
            .collect::<Result<_>>()?;
        let ha = self.layout.require(hvar_a)?;
        let hb = self.layout.require(hvar_b)?;
        // Variables actually used by the polynomial must all be covered.
        let mut covered = vec![false; self.layout.len()];
        for &p in pos_a.iter().chain(&pos_b) {
            covered[p] = true;
        }
        let mut out = Self::zero(self.field.clone(), self.layout.clone());
        for (m, c) in &self.terms {
            for (pos, &e) in m.exps().iter().enumerate() {
                if e > 0 && !covered[pos] {
                    return Err(Error::LayoutMismatch(format!(
                        "variable {} is not covered by the bipartition",
                        self.layout.name(pos)
                    )));
                }
            }
            let da = m.degree_on(&pos_a);
            let db = m.degree_on(&pos_b);
            if da > 2 || db > 2 {
                return Err(Error::DegreeViolation(format!(
                    "monomial has degree {} / {} on the two sides; at most 2 allowed",
                    da, db
                )));
            }
            let mut exps = m.exps().to_vec();
            exps[ha] += 2 - da;
            exps[hb] += 2 - db;
            out.add_term(Monomial::new(exps), c.clone());
        }
        Ok(out)
    }

    /// True iff every monomial has total degree 4 with exactly degree 2 in
    /// `part_a` and degree 2 in `part_b`. The two parts must partition the
    /// layout.
    pub fn is_biquadratic(&self, part_a: &[VarName], part_b: &[VarName]) -> Result<bool> {
        let pos_a: Vec<usize> = part_a
            .iter()
            .map(|n| self.layout.require(n))
            .collect::<Result<_>>()?;
        let pos_b: Vec<usize> = part_b
            .iter()
            .map(|n| self.layout.require(n))
            .collect::<Result<_>>()?;
        let mut seen = vec![false; self.layout.len()];
        for &p in pos_a.iter().chain(&pos_b) {
            if seen[p] {
                return Err(Error::LayoutMismatch(format!(
                    "variable {} appears on both sides of the partition",
                    self.layout.name(p)
                )));
            }
            seen[p] = true;
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::LayoutMismatch(
                "partition does not cover the layout".into(),
            ));
        }
        Ok(self
            .terms
            .keys()
            .all(|m| m.degree() == 4 && m.degree_on(&pos_a) == 2 && m.degree_on(&pos_b) == 2))
    }

    /// Splits p(x + iy) into exact real and imaginary parts over the layout
    /// `real_vars ++ imag_vars`. `real_vars` must list this polynomial's
    /// layout (in order); `imag_vars` supplies one fresh name per variable.
    pub fn complex_split(
        &self,
        real_vars: &[VarName],
        imag_vars: &[VarName],
    ) -> Result<(Polynomial, Polynomial)> {
        if self.field != CoefficientField::Rationals {
            return Err(Error::FieldMismatch);
        }
        if real_vars != self.layout.names() {
            return Err(Error::LayoutMismatch(
                "real variable list must match the polynomial layout".into(),
            ));
        }
        if imag_vars.len() != real_vars.len() {
            return Err(Error::ArityMismatch {
                expected: real_vars.len(),
                got: imag_vars.len(),
            });
        }
        let ext = crate::layout::VariableLayout::new(
            real_vars.iter().chain(imag_vars).cloned().collect(),
        )?;
        let n = real_vars.len();
        let field = CoefficientField::Rationals;
        let mut re = Self::zero(field.clone(), ext.clone());
        let mut im = Self::zero(field.clone(), ext.clone());
        for (m, c) in &self.terms {
            // Expand prod_j (x_j + i y_j)^{e_j}; k_j powers of i accumulate.
            // Entries: (exps over ext layout, i-exponent mod 4, coefficient).
            let mut parts: Vec<(Vec<u32>, u8, BigRational)> =
                vec![(vec![0u32; 2 * n], 0, c.as_rational().clone())];
            for (pos, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let binom = binomial_row(e);
                let mut next = Vec::with_capacity(parts.len() * (e as usize + 1));
                for (exps, ipow, coef) in &parts {
                    for k in 0..=e {
                        let mut exps2 = exps.clone();
                        exps2[pos] += e - k;
                        exps2[n + pos] += k;
                        let c2 = coef * BigRational::from_integer(binom[k as usize].clone().into());
                        next.push((exps2, ((*ipow as u32 + k) % 4) as u8, c2));
                    }
                }
                parts = next;
            }
            for (exps, ipow, coef) in parts {
                let mono = Monomial::new(exps);
                match ipow {
                    0 => re.add_term(mono, Scalar::Rat(coef)),
                    1 => im.add_term(mono, Scalar::Rat(coef)),
                    2 => re.add_term(mono, Scalar::Rat(-coef)),
                    3 => im.add_term(mono, Scalar::Rat(-coef)),
                    _ => unreachable!(),
                }
            }
        }
        Ok((re, im))
    }
}

/// Row e of Pascal's triangle: C(e, 0), ..., C(e, e).
fn binomial_row(e: u32) -> Vec<BigUint> {
    let mut row = vec![BigUint::one()];
    for k in 1..=e as usize {
        let prev = &row[k - 1];
        // C(e, k) = C(e, k-1) * (e - k + 1) / k
        let next = prev * BigUint::from(e as usize - k + 1) / BigUint::from(k);
        row.push(next);
    }
    row
}

/// An ordered list of polynomials over one field and layout, read as the
/// simultaneous system "all members vanish".
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolySystem {
    field: CoefficientField,
    layout: Layout,
    polys: Vec<Polynomial>,
}

impl PolySystem {
    pub fn new(field: CoefficientField, layout: Layout, polys: Vec<Polynomial>) -> Result<Self> {
        for p in &polys {
            if *p.field() != field {
                return Err(Error::FieldMismatch);
            }
            if *p.layout() != layout {
                return Err(Error::LayoutMismatch(
                    "system member uses a different layout".into(),
                ));
            }
        }
        Ok(PolySystem {
            field,
            layout,
            polys,
        })
    }

    pub fn field(&self) -> &CoefficientField {
        &self.field
    }

    pub fn layout(&self) -> &Layout {
        &self.layout
    }

    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn num_vars(&self) -> usize {
        self.layout.len()
    }

    pub fn max_degree(&self) -> u32 {
        self.polys.iter().map(Polynomial::degree).max().unwrap_or(0)
    }

    pub fn is_satisfied_by(&self, point: &[Scalar]) -> Result<bool> {
        for p in &self.polys {
            if !p.evaluate(point)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::layout::VariableLayout;

    fn rat() -> CoefficientField {
        CoefficientField::rationals()
    }

    fn x_layout() -> Layout {
        VariableLayout::parse(&["x"]).unwrap()
    }

    /// Shorthand: polynomial from (coeff, exps) integer pairs.
    pub(crate) fn poly(field: &CoefficientField, layout: &Layout, terms: &[(i64, &[u32])]) -> Polynomial {
        Polynomial::from_terms(
            field.clone(),
            layout.clone(),
            terms
                .iter()
                .map(|(c, e)| (Monomial::new(e.to_vec()), field.from_int(*c))),
        )
        .unwrap()
    }

    #[test]
    fn add_cancels_and_keeps_identity() {
        let f = rat();
        let l = x_layout();
        let xp1 = poly(&f, &l, &[(1, &[1]), (1, &[0])]); // x + 1
        let neg_x = poly(&f, &l, &[(-1, &[1])]);
        let one = poly(&f, &l, &[(1, &[0])]);
        assert_eq!(xp1.add(&neg_x).unwrap(), one);

        let zero = Polynomial::zero(f.clone(), l.clone());
        assert_eq!(xp1.add(&zero).unwrap(), xp1);
    }

    #[test]
    fn add_in_gf3() {
        // 2x + 2x = 4x = x over GF(3)
        let f = CoefficientField::prime(3).unwrap();
        let l = x_layout();
        let two_x = poly(&f, &l, &[(2, &[1])]);
        let x = poly(&f, &l, &[(1, &[1])]);
        assert_eq!(two_x.add(&two_x).unwrap(), x);
    }

    #[test]
    fn mul_difference_of_squares() {
        let f = rat();
        let l = x_layout();
        let a = poly(&f, &l, &[(1, &[1]), (-1, &[0])]); // x - 1
        let b = poly(&f, &l, &[(1, &[1]), (1, &[0])]); // x + 1
        let expect = poly(&f, &l, &[(1, &[2]), (-1, &[0])]); // x^2 - 1
        assert_eq!(a.mul(&b).unwrap(), expect);

        let one = poly(&f, &l, &[(1, &[0])]);
        assert_eq!(a.mul(&one).unwrap(), a);
    }

    #[test]
    fn mul_binomial_square() {
        let f = rat();
        let l = VariableLayout::parse(&["x", "y"]).unwrap();
        let xy = poly(&f, &l, &[(1, &[1, 0]), (1, &[0, 1])]); // x + y
        let sq = xy.mul(&xy).unwrap();
        let expect = poly(&f, &l, &[(1, &[2, 0]), (2, &[1, 1]), (1, &[0, 2])]);
        assert_eq!(sq, expect);
    }

    #[test]
    fn shift_square_and_zero_offset() {
        let f = rat();
        let l = x_layout();
        let x2 = poly(&f, &l, &[(1, &[2])]);
        let shifted = x2.shift_substitute(&[f.from_int(1)]).unwrap();
        let expect = poly(&f, &l, &[(1, &[2]), (2, &[1]), (1, &[0])]);
        assert_eq!(shifted, expect);

        let p = poly(&f, &l, &[(3, &[2]), (-1, &[1]), (7, &[0])]);
        assert_eq!(p.shift_substitute(&[f.zero()]).unwrap(), p);
    }

    #[test]
    fn shift_keeps_count_but_changes_terms() {
        // (x+1)^2 - 2(x+1) = x^2 - 1: count stays 2, terms differ
        let f = rat();
        let l = x_layout();
        let p = poly(&f, &l, &[(1, &[2]), (-2, &[1])]);
        let shifted = p.shift_substitute(&[f.from_int(1)]).unwrap();
        let expect = poly(&f, &l, &[(1, &[2]), (-1, &[0])]);
        assert_eq!(shifted, expect);
        assert_eq!(p.monomial_count(), 2);
        assert_eq!(shifted.monomial_count(), 2);
    }

    #[test]
    fn affine_substitution() {
        let f = rat();
        let l = x_layout();
        let ly = VariableLayout::parse(&["y"]).unwrap();
        let x2 = poly(&f, &l, &[(1, &[2])]);
        let form = poly(&f, &ly, &[(1, &[1]), (1, &[0])]); // y + 1
        let got = x2.affine_substitute(&[form]).unwrap();
        let expect = poly(&f, &ly, &[(1, &[2]), (2, &[1]), (1, &[0])]);
        assert_eq!(got, expect);

        // identity forms leave the polynomial unchanged
        let p = poly(&f, &l, &[(2, &[3]), (-1, &[1])]);
        let id = Polynomial::var(f.clone(), l.clone(), &"x".parse().unwrap()).unwrap();
        assert_eq!(p.affine_substitute(&[id]).unwrap(), p);

        // rank-deficient projection: xy with forms (u, u) -> u^2
        let lxy = VariableLayout::parse(&["x", "y"]).unwrap();
        let lu = VariableLayout::parse(&["u"]).unwrap();
        let xy = poly(&f, &lxy, &[(1, &[1, 1])]);
        let u = Polynomial::var(f.clone(), lu.clone(), &"u".parse().unwrap()).unwrap();
        let got = xy.affine_substitute(&[u.clone(), u]).unwrap();
        assert_eq!(got, poly(&f, &lu, &[(1, &[2])]));

        // degree > 1 form rejected
        let q = poly(&f, &ly, &[(1, &[2])]);
        assert!(x2.affine_substitute(&[q]).is_err());
    }

    #[test]
    fn monomial_count_examples() {
        let f = rat();
        let l = x_layout();
        assert_eq!(Polynomial::zero(f.clone(), l.clone()).monomial_count(), 0);
        let p = poly(&f, &l, &[(1, &[2]), (2, &[1]), (1, &[0])]);
        assert_eq!(p.monomial_count(), 3);
    }

    #[test]
    fn partial_derivatives() {
        let f = rat();
        let l = VariableLayout::parse(&["x", "y"]).unwrap();
        let p = poly(&f, &l, &[(1, &[2, 1])]); // x^2 y
        let dx = p.partial_derivative(&"x".parse().unwrap()).unwrap();
        assert_eq!(dx, poly(&f, &l, &[(2, &[1, 1])]));

        let c = poly(&f, &l, &[(5, &[0, 0])]);
        assert!(c.partial_derivative(&"x".parse().unwrap()).unwrap().is_zero());

        // d^2(x^2 y^2)/dx dy = 4xy
        let q = poly(&f, &l, &[(1, &[2, 2])]);
        let qxy = q
            .partial_derivative(&"x".parse().unwrap())
            .unwrap()
            .partial_derivative(&"y".parse().unwrap())
            .unwrap();
        assert_eq!(qxy, poly(&f, &l, &[(4, &[1, 1])]));

        assert!(p.partial_derivative(&"zz".parse().unwrap()).is_err());
    }

    #[test]
    fn homogenize_bipartite_examples() {
        let f = rat();
        // layout: x0 in part A, w0 in part B, homogenizers alpha, beta
        let l = VariableLayout::parse(&["x.0", "w.0", "alpha", "beta"]).unwrap();
        let a: VarName = "alpha".parse().unwrap();
        let b: VarName = "beta".parse().unwrap();
        let part_a = vec!["x.0".parse().unwrap()];
        let part_b = vec!["w.0".parse().unwrap()];

        // h = 1 -> alpha^2 beta^2
        let one = poly(&f, &l, &[(1, &[0, 0, 0, 0])]);
        let h = one.homogenize_bipartite(&part_a, &part_b, &a, &b).unwrap();
        assert_eq!(h, poly(&f, &l, &[(1, &[0, 0, 2, 2])]));

        // h = x0 w0 -> x0 w0 alpha beta
        let xw = poly(&f, &l, &[(1, &[1, 1, 0, 0])]);
        let h = xw.homogenize_bipartite(&part_a, &part_b, &a, &b).unwrap();
        assert_eq!(h, poly(&f, &l, &[(1, &[1, 1, 1, 1])]));

        // h = (x0 - 1)^2 -> x0^2 beta^2 - 2 x0 alpha beta^2 + alpha^2 beta^2
        let sq = poly(&f, &l, &[(1, &[2, 0, 0, 0]), (-2, &[1, 0, 0, 0]), (1, &[0, 0, 0, 0])]);
        let h = sq.homogenize_bipartite(&part_a, &part_b, &a, &b).unwrap();
        let expect = poly(
            &f,
            &l,
            &[(1, &[2, 0, 0, 2]), (-2, &[1, 0, 1, 2]), (1, &[0, 0, 2, 2])],
        );
        assert_eq!(h, expect);
        assert!(h
            .is_biquadratic(
                &["x.0".parse().unwrap(), "alpha".parse().unwrap()],
                &["w.0".parse().unwrap(), "beta".parse().unwrap()]
            )
            .unwrap());

        // degree 3 on one side is rejected
        let cube = poly(&f, &l, &[(1, &[3, 0, 0, 0])]);
        assert!(cube.homogenize_bipartite(&part_a, &part_b, &a, &b).is_err());
    }

    #[test]
    fn biquadratic_predicate() {
        let f = rat();
        let l = VariableLayout::parse(&["x.1", "y.1"]).unwrap();
        let part_a = vec!["x.1".parse().unwrap()];
        let part_b = vec!["y.1".parse().unwrap()];
        let q = poly(&f, &l, &[(1, &[2, 2])]);
        assert!(q.is_biquadratic(&part_a, &part_b).unwrap());
        let bad = poly(&f, &l, &[(1, &[3, 1])]);
        assert!(!bad.is_biquadratic(&part_a, &part_b).unwrap());
        // non-partition input errors
        assert!(q.is_biquadratic(&part_a, &part_a).is_err());
    }

    #[test]
    fn complex_split_examples() {
        let f = rat();
        let l = x_layout();
        let iv: Vec<VarName> = vec!["y".parse().unwrap()];
        let rv: Vec<VarName> = vec!["x".parse().unwrap()];

        // x^2 -> Re = x^2 - y^2, Im = 2xy
        let x2 = poly(&f, &l, &[(1, &[2])]);
        let (re, im) = x2.complex_split(&rv, &iv).unwrap();
        let lxy = VariableLayout::parse(&["x", "y"]).unwrap();
        assert_eq!(re, poly(&f, &lxy, &[(1, &[2, 0]), (-1, &[0, 2])]));
        assert_eq!(im, poly(&f, &lxy, &[(2, &[1, 1])]));

        // constant -> (c, 0)
        let c = poly(&f, &l, &[(7, &[0])]);
        let (re, im) = c.complex_split(&rv, &iv).unwrap();
        assert_eq!(re, poly(&f, &lxy, &[(7, &[0, 0])]));
        assert!(im.is_zero());

        // x^4 -> Re = x^4 - 6x^2y^2 + y^4, Im = 4x^3y - 4xy^3
        let x4 = poly(&f, &l, &[(1, &[4])]);
        let (re, im) = x4.complex_split(&rv, &iv).unwrap();
        assert_eq!(
            re,
            poly(&f, &lxy, &[(1, &[4, 0]), (-6, &[2, 2]), (1, &[0, 4])])
        );
        assert_eq!(im, poly(&f, &lxy, &[(4, &[3, 1]), (-4, &[1, 3])]));
    }

    #[test]
    fn evaluate_and_system() {
        let f = CoefficientField::prime(5).unwrap();
        let l = VariableLayout::parse(&["x.1", "x.2"]).unwrap();
        let p = poly(&f, &l, &[(1, &[1, 1]), (-1, &[0, 0])]); // x1 x2 - 1
        let v = p.evaluate(&[f.from_int(2), f.from_int(3)]).unwrap();
        assert!(v.is_zero());
        let sys = PolySystem::new(f.clone(), l.clone(), vec![p]).unwrap();
        assert!(sys.is_satisfied_by(&[f.from_int(2), f.from_int(3)]).unwrap());
        assert!(!sys.is_satisfied_by(&[f.from_int(1), f.from_int(2)]).unwrap());
    }
}
