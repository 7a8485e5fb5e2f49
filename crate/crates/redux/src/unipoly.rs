//! Dense univariate polynomials over the rationals, with Sturm chains.
//!
//! This is the real-rootedness engine: square-free part via gcd, then the
//! classical sign-variation count at -inf and +inf. Chain elements are
//! content-normalized after every division step to control coefficient
//! growth; scaling by positive rationals never changes a sign pattern.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::poly::Polynomial;

/// Coefficients in increasing degree order; the last entry is nonzero
/// (empty means the zero polynomial).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<BigRational>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// b + a t
    pub fn linear(b: BigRational, a: BigRational) -> Self {
        Self::from_coeffs(vec![b, a])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> UniPoly {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigRational::from_integer(i.into()))
            .collect();
        UniPoly::from_coeffs(coeffs)
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![BigRational::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        UniPoly::from_coeffs(out)
    }

    pub fn neg(&self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(out)
    }

    pub fn scale(&self, s: &BigRational) -> UniPoly {
        if s.is_zero() {
            return UniPoly::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> UniPoly {
        let mut acc = UniPoly::constant(BigRational::one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Euclidean division: self = q * div + r with deg r < deg div.
    pub fn divrem(&self, div: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!div.is_zero(), "division by the zero polynomial");
        let dd = div.coeffs.len() - 1;
        let lead = div.leading().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (UniPoly::zero(), self.clone());
        }
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let factor = rem.last().unwrap() / lead;
            quot[k] = factor.clone();
            for (i, c) in div.coeffs.iter().enumerate() {
                let v = &rem[k + i] - c * &factor;
                rem[k + i] = v;
            }
            debug_assert!(rem.last().unwrap().is_zero());
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
            if rem.len() <= dd {
                break;
            }
        }
        (UniPoly::from_coeffs(quot), UniPoly { coeffs: rem })
    }

    /// Divides out the content (a positive rational), yielding primitive
    /// integer coefficients with the same signs.
    pub fn normalize_content(&self) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let den_lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * &den_lcm / c.denom())
            .collect();
        let g = ints
            .iter()
            .fold(BigInt::zero(), |acc, v| acc.gcd(v));
        UniPoly {
            coeffs: ints
                .iter()
                .map(|v| BigRational::from_integer(v / &g))
                .collect(),
        }
    }

    /// Monic gcd via the Euclidean algorithm with content normalization.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let mut a = self.normalize_content();
        let mut b = other.normalize_content();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r.normalize_content();
        }
        if a.is_zero() {
            return a;
        }
        let lead = a.leading().unwrap().clone();
        a.scale(&lead.recip())
    }

    /// self / gcd(self, self'): same distinct roots, all simple.
    pub fn square_free_part(&self) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == Some(0) {
            return self.clone();
        }
        let (q, r) = self.divrem(&g);
        debug_assert!(r.is_zero(), "gcd must divide exactly");
        q
    }

    fn sign_at_pos_inf(&self) -> i8 {
        match self.leading() {
            None => 0,
            Some(c) => {
                if c.is_positive() {
                    1
                } else {
                    -1
                }
            }
        }
    }

    fn sign_at_neg_inf(&self) -> i8 {
        match self.degree() {
            None => 0,
            Some(d) => {
                let s = self.sign_at_pos_inf();
                if d % 2 == 0 {
                    s
                } else {
                    -s
                }
            }
        }
    }

    /// Number of distinct real roots, for a square-free polynomial.
    pub fn sturm_distinct_real_roots(&self) -> usize {
        if self.degree().unwrap_or(0) == 0 {
            return 0;
        }
        let mut chain = vec![self.normalize_content()];
        chain.push(self.derivative().normalize_content());
        loop {
            let n = chain.len();
            if chain[n - 1].is_zero() {
                chain.pop();
                break;
            }
            let (_, r) = chain[n - 2].divrem(&chain[n - 1]);
            if r.is_zero() {
                break;
            }
            chain.push(r.neg().normalize_content());
        }
        let variations = |signs: Vec<i8>| -> usize {
            let mut count = 0;
            let mut last = 0i8;
            for s in signs.into_iter().filter(|&s| s != 0) {
                if last != 0 && s != last {
                    count += 1;
                }
                last = s;
            }
            count
        };
        let v_neg = variations(chain.iter().map(|p| p.sign_at_neg_inf()).collect());
        let v_pos = variations(chain.iter().map(|p| p.sign_at_pos_inf()).collect());
        v_neg - v_pos
    }

    /// True iff every complex root is real (multiplicities allowed): the
    /// square-free part must have as many distinct real roots as its degree.
    pub fn is_real_rooted(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let sf = self.square_free_part();
        let d = sf.degree().unwrap_or(0);
        Ok(sf.sturm_distinct_real_roots() == d)
    }

    /// Converts a sparse one-variable polynomial over the rationals.
    pub fn from_poly(p: &Polynomial) -> Result<UniPoly> {
        if p.layout().len() != 1 {
            return Err(Error::LayoutMismatch(format!(
                "expected a univariate polynomial, layout has {} variables",
                p.layout().len()
            )));
        }
        let deg = p.degree() as usize;
        let mut coeffs = vec![BigRational::zero(); deg + 1];
        for (m, c) in p.terms() {
            coeffs[m.exp(0) as usize] = rational_of(c);
        }
        Ok(UniPoly::from_coeffs(coeffs))
    }

    /// The univariate restriction t -> p(base + t * dir) of a polynomial
    /// over the rationals.
    pub fn restrict_line(p: &Polynomial, base: &[BigRational], dir: &[BigRational]) -> Result<UniPoly> {
        let n = p.layout().len();
        if base.len() != n || dir.len() != n {
            return Err(Error::ArityMismatch {
                expected: n,
                got: base.len().min(dir.len()),
            });
        }
        let mut acc = UniPoly::zero();
        for (m, c) in p.terms() {
            let mut term = UniPoly::constant(rational_of(c));
            for (pos, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    let lin = UniPoly::linear(base[pos].clone(), dir[pos].clone());
                    term = term.mul(&lin.pow(e));
                }
            }
            acc = acc.add(&term);
        }
        Ok(acc)
    }
}

fn rational_of(c: &Scalar) -> BigRational {
    match c {
        Scalar::Rat(r) => r.clone(),
        Scalar::Fp(v) => BigRational::from_integer(BigInt::from(BigUint::clone(v))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn division_and_gcd() {
        // (t-1)(t+2) = t^2 + t - 2
        let p = UniPoly::from_i64(&[-2, 1, 1]);
        let d = UniPoly::from_i64(&[-1, 1]); // t - 1
        let (q, r) = p.divrem(&d);
        assert!(r.is_zero());
        assert_eq!(q, UniPoly::from_i64(&[2, 1]));

        // gcd((t-1)^2(t+2), (t-1)(t+3)) = t - 1 (monic)
        let a = UniPoly::from_i64(&[-1, 1]).pow(2).mul(&UniPoly::from_i64(&[2, 1]));
        let b = UniPoly::from_i64(&[-1, 1]).mul(&UniPoly::from_i64(&[3, 1]));
        assert_eq!(a.gcd(&b), UniPoly::from_i64(&[-1, 1]));
    }

    #[test]
    fn square_free_part_strips_multiplicity() {
        let p = UniPoly::from_i64(&[-1, 1]).pow(2).mul(&UniPoly::from_i64(&[2, 1]));
        let sf = p.square_free_part();
        // (t-1)(t+2) up to a constant; normalize both sides
        let expect = UniPoly::from_i64(&[-2, 1, 1]);
        let lead = sf.leading().unwrap().clone();
        assert_eq!(sf.scale(&lead.recip()), expect);
    }

    #[test]
    fn sturm_counts() {
        // t^2 + 1: no real roots
        assert_eq!(UniPoly::from_i64(&[1, 0, 1]).sturm_distinct_real_roots(), 0);
        // t^2 - 2: two
        assert_eq!(UniPoly::from_i64(&[-2, 0, 1]).sturm_distinct_real_roots(), 2);
        // t^3 - t = t(t-1)(t+1): three
        assert_eq!(UniPoly::from_i64(&[0, -1, 0, 1]).sturm_distinct_real_roots(), 3);
    }

    #[test]
    fn real_rootedness() {
        assert!(!UniPoly::from_i64(&[1, 0, 1]).is_real_rooted().unwrap());
        // (t-1)^2 (t+2): multiplicities handled via the square-free part
        let p = UniPoly::from_i64(&[-1, 1]).pow(2).mul(&UniPoly::from_i64(&[2, 1]));
        assert!(p.is_real_rooted().unwrap());
        // t^4 - 16t^2 + 1: t^2 = 8 +- sqrt(63), four real roots
        assert!(UniPoly::from_i64(&[1, 0, -16, 0, 1]).is_real_rooted().unwrap());
        // constants are vacuously real-rooted; zero is an error
        assert!(UniPoly::from_i64(&[5]).is_real_rooted().unwrap());
        assert!(UniPoly::zero().is_real_rooted().is_err());
    }
}
