//! Sparse multivariate polynomials with exact rational or floating
//! coefficients, plus vector polynomials and polynomial matrices.
//!
//! Exact mode is the default everywhere certificates, determinants or
//! distances are produced; floating mode exists for scratch numerics only.

mod matrix;
mod monomial;
mod parse;

pub use matrix::PolyMatrix;
pub use monomial::Monomial;
pub use parse::{parse_polynomial, ParseError};

use crate::error::{Error, Result};
use num::complex::Complex64;
use num::{BigRational, FromPrimitive, One, Signed, ToPrimitive, Zero};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// Coefficient arithmetic mode of a polynomial.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CoeffMode {
    Exact,
    Float,
}

/// A single coefficient in either mode.
#[derive(Clone, PartialEq, Debug)]
pub enum Coeff {
    Exact(BigRational),
    Float(f64),
}

impl Coeff {
    fn mode(&self) -> CoeffMode {
        match self {
            Coeff::Exact(_) => CoeffMode::Exact,
            Coeff::Float(_) => CoeffMode::Float,
        }
    }

    fn is_zero(&self) -> bool {
        match self {
            Coeff::Exact(r) => r.is_zero(),
            Coeff::Float(x) => *x == 0.0,
        }
    }

    fn add(&self, other: &Coeff) -> Coeff {
        match (self, other) {
            (Coeff::Exact(a), Coeff::Exact(b)) => Coeff::Exact(a + b),
            (Coeff::Float(a), Coeff::Float(b)) => Coeff::Float(a + b),
            _ => panic!("coefficient mode mismatch"),
        }
    }

    fn mul(&self, other: &Coeff) -> Coeff {
        match (self, other) {
            (Coeff::Exact(a), Coeff::Exact(b)) => Coeff::Exact(a * b),
            (Coeff::Float(a), Coeff::Float(b)) => Coeff::Float(a * b),
            _ => panic!("coefficient mode mismatch"),
        }
    }

    fn neg(&self) -> Coeff {
        match self {
            Coeff::Exact(a) => Coeff::Exact(-a),
            Coeff::Float(a) => Coeff::Float(-a),
        }
    }

    pub fn to_c64(&self) -> Complex64 {
        match self {
            Coeff::Exact(r) => Complex64::new(r.to_f64().unwrap_or(f64::NAN), 0.0),
            Coeff::Float(x) => Complex64::new(*x, 0.0),
        }
    }

    pub fn as_exact(&self) -> Option<&BigRational> {
        match self {
            Coeff::Exact(r) => Some(r),
            Coeff::Float(_) => None,
        }
    }
}

/// Degree of a polynomial; the zero polynomial has degree `NegInfinity`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Degree {
    NegInfinity,
    Finite(u32),
}

impl Degree {
    pub fn finite(self) -> Option<u32> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

/// The four primitive arithmetic operations of [`Polynomial::arith`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ArithKind {
    Add,
    Sub,
    Mul,
}

/// A sparse multivariate polynomial over `z1, z2, ...`.
#[derive(Clone, PartialEq, Debug)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Coeff>,
    mode: CoeffMode,
}

impl Polynomial {
    pub fn zero(mode: CoeffMode) -> Self {
        Polynomial {
            terms: BTreeMap::new(),
            mode,
        }
    }

    pub fn one() -> Self {
        Polynomial::constant(BigRational::one())
    }

    /// Exact-mode constant.
    pub fn constant(c: BigRational) -> Self {
        let mut p = Polynomial::zero(CoeffMode::Exact);
        p.insert_term(Monomial::one(), Coeff::Exact(c));
        p
    }

    pub fn constant_i64(c: i64) -> Self {
        Polynomial::constant(BigRational::from_integer(c.into()))
    }

    /// Exact-mode variable `z_i`.
    pub fn var(i: u32) -> Self {
        let mut p = Polynomial::zero(CoeffMode::Exact);
        p.insert_term(Monomial::var(i), Coeff::Exact(BigRational::one()));
        p
    }

    pub fn from_terms(mode: CoeffMode, terms: impl IntoIterator<Item = (Monomial, Coeff)>) -> Self {
        let mut p = Polynomial::zero(mode);
        for (m, c) in terms {
            assert_eq!(c.mode(), mode, "coefficient mode mismatch");
            p.add_term(m, c);
        }
        p
    }

    fn insert_term(&mut self, m: Monomial, c: Coeff) {
        if !c.is_zero() {
            self.terms.insert(m, c);
        }
    }

    fn add_term(&mut self, m: Monomial, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&m) {
            None => {
                self.terms.insert(m, c);
            }
            Some(old) => {
                let sum = old.add(&c);
                if !sum.is_zero() {
                    self.terms.insert(m, sum);
                }
            }
        }
    }

    pub fn mode(&self) -> CoeffMode {
        self.mode
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Coeff)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Option<&Coeff> {
        self.terms.get(m)
    }

    pub fn degree(&self) -> Degree {
        self.terms
            .keys()
            .map(|m| m.total_degree())
            .max()
            .map_or(Degree::NegInfinity, Degree::Finite)
    }

    /// Largest variable index appearing, or 0 for constants.
    pub fn max_var(&self) -> u32 {
        self.terms.keys().map(|m| m.max_var()).max().unwrap_or(0)
    }

    /// The set of variable indices that actually occur.
    pub fn active_vars(&self) -> BTreeSet<u32> {
        let mut s = BTreeSet::new();
        for m in self.terms.keys() {
            for (v, _) in m.pairs() {
                s.insert(v);
            }
        }
        s
    }

    /// Checked arithmetic; operands must share a coefficient mode.
    pub fn arith(a: &Polynomial, b: &Polynomial, kind: ArithKind) -> Result<Polynomial> {
        if a.mode != b.mode {
            return Err(Error::ModeMismatch);
        }
        Ok(match kind {
            ArithKind::Add => a.add(b),
            ArithKind::Sub => a.sub(b),
            ArithKind::Mul => a.mul(b),
        })
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.mode, other.mode, "coefficient mode mismatch");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.mode, other.mode, "coefficient mode mismatch");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.neg());
        }
        out
    }

    pub fn neg(&self) -> Polynomial {
        let mut out = Polynomial::zero(self.mode);
        for (m, c) in &self.terms {
            out.insert_term(m.clone(), c.neg());
        }
        out
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.mode, other.mode, "coefficient mode mismatch");
        let mut out = Polynomial::zero(self.mode);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca.mul(cb));
            }
        }
        out
    }

    /// Scale by an exact rational (exact mode only).
    pub fn scale(&self, c: &BigRational) -> Polynomial {
        assert_eq!(self.mode, CoeffMode::Exact, "scale is an exact-mode op");
        if c.is_zero() {
            return Polynomial::zero(self.mode);
        }
        let mut out = Polynomial::zero(self.mode);
        for (m, k) in &self.terms {
            out.insert_term(m.clone(), k.mul(&Coeff::Exact(c.clone())));
        }
        out
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        let mut out = Polynomial::zero(self.mode);
        for (ma, ca) in &self.terms {
            out.insert_term(ma.mul(m), ca.clone());
        }
        out
    }

    /// Evaluate at a complex point; `point[i-1]` is the value of `z_i`.
    pub fn eval_complex(&self, point: &[Complex64]) -> Result<Complex64> {
        let maxv = self.max_var();
        if maxv as usize > point.len() {
            return Err(Error::MissingCoordinate(maxv));
        }
        let mut acc = Complex64::new(0.0, 0.0);
        for (m, c) in &self.terms {
            let mut t = c.to_c64();
            for (v, e) in m.pairs() {
                t *= point[(v - 1) as usize].powu(e);
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Exact evaluation at a rational point (exact mode only).
    pub fn eval_exact(&self, point: &[BigRational]) -> Result<BigRational> {
        if self.mode != CoeffMode::Exact {
            return Err(Error::ModeMismatch);
        }
        let maxv = self.max_var();
        if maxv as usize > point.len() {
            return Err(Error::MissingCoordinate(maxv));
        }
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.as_exact().unwrap().clone();
            for (v, e) in m.pairs() {
                let base = &point[(v - 1) as usize];
                let mut pw = BigRational::one();
                for _ in 0..e {
                    pw *= base;
                }
                t *= pw;
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Leading term under the graded lexicographic order.
    pub fn leading_term(&self) -> Option<(&Monomial, &Coeff)> {
        self.terms.iter().next_back()
    }

    /// Exact quotient `self / d`, or `None` when the division is not exact.
    /// Both operands must be exact-mode.
    pub fn exact_div(&self, d: &Polynomial) -> Option<Polynomial> {
        assert_eq!(self.mode, CoeffMode::Exact);
        assert_eq!(d.mode, CoeffMode::Exact);
        assert!(!d.is_zero(), "division by the zero polynomial");
        let (dm, dc) = d.leading_term().unwrap();
        let dc = dc.as_exact().unwrap();
        let mut rem = self.clone();
        let mut quot = Polynomial::zero(CoeffMode::Exact);
        while let Some((rm, rc)) = rem.leading_term() {
            if !dm.divides(rm) {
                return None;
            }
            let qm = dm.div_into(rm);
            let qc = rc.as_exact().unwrap() / dc;
            let mut t = Polynomial::zero(CoeffMode::Exact);
            t.insert_term(qm, Coeff::Exact(qc));
            rem = rem.sub(&t.mul(d));
            quot = quot.add(&t);
        }
        Some(quot)
    }

    /// The homogeneous part of degree `k`.
    pub fn homogeneous_part(&self, k: u32) -> Polynomial {
        let mut out = Polynomial::zero(self.mode);
        for (m, c) in &self.terms {
            if m.total_degree() == k {
                out.insert_term(m.clone(), c.clone());
            }
        }
        out
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.total_degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Substitute `z_i = 0` for all `i > m`.
    pub fn zero_vars_above(&self, m: u32) -> Polynomial {
        let mut out = Polynomial::zero(self.mode);
        for (mono, c) in &self.terms {
            if mono.max_var() <= m {
                out.insert_term(mono.clone(), c.clone());
            }
        }
        out
    }

    /// Smallest `n` with a nonzero homogeneous part of degree `n`
    /// (the order of vanishing at the origin); `None` for the zero polynomial.
    pub fn vanishing_order(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.total_degree()).min()
    }

    /// Convert an exact polynomial to floating mode.
    pub fn to_float_mode(&self) -> Polynomial {
        let mut out = Polynomial::zero(CoeffMode::Float);
        for (m, c) in &self.terms {
            let x = match c {
                Coeff::Exact(r) => r.to_f64().unwrap_or(f64::NAN),
                Coeff::Float(x) => *x,
            };
            out.insert_term(m.clone(), Coeff::Float(x));
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // descending graded-lex, the usual reading order
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let (neg, mag) = match c {
                Coeff::Exact(r) => (r.is_negative(), format!("{}", r.abs())),
                Coeff::Float(x) => (*x < 0.0, format!("{}", x.abs())),
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let coeff_is_one = mag == "1";
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if coeff_is_one {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

/// An element of the free module `P^N`: `N` polynomial components.
#[derive(Clone, PartialEq, Debug)]
pub struct VectorPolynomial {
    components: Vec<Polynomial>,
}

impl VectorPolynomial {
    pub fn new(components: Vec<Polynomial>) -> Self {
        assert!(!components.is_empty());
        VectorPolynomial { components }
    }

    pub fn zero(ambient: usize) -> Self {
        VectorPolynomial::new(vec![Polynomial::zero(CoeffMode::Exact); ambient])
    }

    pub fn ambient_dim(&self) -> usize {
        self.components.len()
    }

    pub fn component(&self, k: usize) -> &Polynomial {
        &self.components[k]
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|p| p.is_zero())
    }

    pub fn degree(&self) -> Degree {
        self.components
            .iter()
            .map(|p| p.degree())
            .max()
            .unwrap_or(Degree::NegInfinity)
    }

    pub fn max_var(&self) -> u32 {
        self.components.iter().map(|p| p.max_var()).max().unwrap_or(0)
    }

    /// 0-based indices of nonzero components.
    pub fn support(&self) -> Vec<usize> {
        self.components
            .iter()
            .enumerate()
            .filter(|(_, p)| !p.is_zero())
            .map(|(k, _)| k)
            .collect()
    }

    pub fn add(&self, other: &VectorPolynomial) -> VectorPolynomial {
        assert_eq!(self.ambient_dim(), other.ambient_dim());
        VectorPolynomial::new(
            self.components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a.add(b))
                .collect(),
        )
    }

    /// Multiply every component by a scalar polynomial.
    pub fn scale_poly(&self, q: &Polynomial) -> VectorPolynomial {
        VectorPolynomial::new(self.components.iter().map(|p| p.mul(q)).collect())
    }

    /// `sum_i coeffs[i] * vecs[i]` with polynomial coefficients.
    pub fn linear_combination(
        coeffs: &[Polynomial],
        vecs: &[&VectorPolynomial],
    ) -> VectorPolynomial {
        assert_eq!(coeffs.len(), vecs.len());
        assert!(!vecs.is_empty());
        let mut acc = VectorPolynomial::zero(vecs[0].ambient_dim());
        for (q, v) in coeffs.iter().zip(vecs) {
            acc = acc.add(&v.scale_poly(q));
        }
        acc
    }

    pub fn eval_complex(&self, point: &[Complex64]) -> Result<Vec<Complex64>> {
        self.components.iter().map(|p| p.eval_complex(point)).collect()
    }
}

impl fmt::Display for VectorPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.components.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Convenience constructor used all over the tests: parse an exact polynomial
/// from the CLI text grammar, panicking on bad input.
pub fn poly(s: &str) -> Polynomial {
    parse_polynomial(s).unwrap_or_else(|e| panic!("bad polynomial {s:?}: {e}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn difference_of_squares() {
        let a = poly("z1 + z2");
        let b = poly("z1 - z2");
        let prod = Polynomial::arith(&a, &b, ArithKind::Mul).unwrap();
        assert_eq!(prod, poly("z1^2 - z2^2"));
    }

    #[test]
    fn zero_annihilates() {
        let p = poly("3/2*z1^2*z3 - z2");
        let z = Polynomial::zero(CoeffMode::Exact);
        assert!(p.mul(&z).is_zero());
        assert_eq!(p.mul(&z).degree(), Degree::NegInfinity);
    }

    #[test]
    fn scaling() {
        let p = poly("z1*z2 + 1/2*z3");
        let two = BigRational::from_i64(2).unwrap();
        assert_eq!(p.scale(&two), poly("2*z1*z2 + z3"));
    }

    #[test]
    fn mode_mismatch_rejected() {
        let a = poly("z1");
        let b = a.to_float_mode();
        assert!(matches!(
            Polynomial::arith(&a, &b, ArithKind::Add),
            Err(Error::ModeMismatch)
        ));
    }

    #[test]
    fn eval_examples() {
        // z1*z2 at (1/2, 1/3) = 1/6
        let p = poly("z1*z2");
        let half = BigRational::new(1.into(), 2.into());
        let third = BigRational::new(1.into(), 3.into());
        assert_eq!(
            p.eval_exact(&[half, third]).unwrap(),
            BigRational::new(1.into(), 6.into())
        );
        // constant 1 anywhere
        assert_eq!(poly("1").eval_exact(&[]).unwrap(), BigRational::one());
        // root of z1^2 - z2 at (2, 4)
        let q = poly("z1^2 - z2");
        let two = BigRational::from_i64(2).unwrap();
        let four = BigRational::from_i64(4).unwrap();
        assert!(q.eval_exact(&[two, four]).unwrap().is_zero());
    }

    #[test]
    fn missing_coordinate_rejected() {
        let p = poly("z3");
        assert!(matches!(
            p.eval_complex(&[Complex64::new(0.1, 0.0)]),
            Err(Error::MissingCoordinate(3))
        ));
    }

    #[test]
    fn exact_division() {
        let p = poly("z1^2 - z2^2");
        let d = poly("z1 - z2");
        assert_eq!(p.exact_div(&d).unwrap(), poly("z1 + z2"));
        assert!(p.exact_div(&poly("z3")).is_none());
    }

    #[test]
    fn display_round_trips() {
        for s in ["3/2*z1^2*z3 - z2", "0", "-z1 + 1", "z1*z2 + 1/2*z3"] {
            let p = poly(s);
            let q = poly(&p.to_string());
            assert_eq!(p, q, "round trip failed for {s}");
        }
    }
}
