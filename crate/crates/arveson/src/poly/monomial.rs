//! Sparse exponent vectors over an unbounded set of variables `z1, z2, ...`.

use num::{BigInt, BigRational, One};
use std::cmp::Ordering;
use std::fmt;

/// A monomial `z^alpha`, stored as a sparse sorted list of
/// `(variable index, exponent)` pairs with 1-based variable indices.
///
/// Zero exponents are never stored; the total degree is cached.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: Vec<(u32, u32)>,
    degree: u32,
}

impl Monomial {
    /// The constant monomial `1`.
    pub fn one() -> Self {
        Monomial {
            exps: Vec::new(),
            degree: 0,
        }
    }

    /// The single variable `z_i` (1-based).
    pub fn var(i: u32) -> Self {
        assert!(i >= 1, "variable indices are 1-based");
        Monomial {
            exps: vec![(i, 1)],
            degree: 1,
        }
    }

    /// Build from `(variable, exponent)` pairs; zero exponents are dropped.
    pub fn from_pairs(pairs: &[(u32, u32)]) -> Self {
        let mut exps: Vec<(u32, u32)> = Vec::new();
        for &(v, e) in pairs {
            assert!(v >= 1, "variable indices are 1-based");
            if e == 0 {
                continue;
            }
            match exps.iter_mut().find(|(w, _)| *w == v) {
                Some((_, cur)) => *cur += e,
                None => exps.push((v, e)),
            }
        }
        exps.sort_unstable_by_key(|&(v, _)| v);
        let degree = exps.iter().map(|&(_, e)| e).sum();
        Monomial { exps, degree }
    }

    pub fn total_degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    /// Exponent of variable `i`.
    pub fn exponent(&self, i: u32) -> u32 {
        self.exps
            .iter()
            .find(|&&(v, _)| v == i)
            .map_or(0, |&(_, e)| e)
    }

    /// Iterator over the stored `(variable, exponent)` pairs.
    pub fn pairs(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.exps.iter().copied()
    }

    /// Largest variable index used, or 0 for the constant monomial.
    pub fn max_var(&self) -> u32 {
        self.exps.last().map_or(0, |&(v, _)| v)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut a, mut b) = (self.exps.iter().peekable(), other.exps.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&(va, ea)), Some(&&(vb, eb))) => match va.cmp(&vb) {
                    Ordering::Less => {
                        exps.push((va, ea));
                        a.next();
                    }
                    Ordering::Greater => {
                        exps.push((vb, eb));
                        b.next();
                    }
                    Ordering::Equal => {
                        exps.push((va, ea + eb));
                        a.next();
                        b.next();
                    }
                },
                (Some(&&p), None) => {
                    exps.push(p);
                    a.next();
                }
                (None, Some(&&p)) => {
                    exps.push(p);
                    b.next();
                }
                (None, None) => break,
            }
        }
        let degree = self.degree + other.degree;
        Monomial { exps, degree }
    }

    /// Whether `self` divides `other` as monomials.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().all(|&(v, e)| other.exponent(v) >= e)
    }

    /// `other / self`, assuming divisibility.
    pub fn div_into(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        let pairs: Vec<(u32, u32)> = other
            .exps
            .iter()
            .map(|&(v, e)| (v, e - self.exponent(v)))
            .collect();
        Monomial::from_pairs(&pairs)
    }

    /// Multiply by `z_i` (used by shift matrices).
    pub fn times_var(&self, i: u32) -> Monomial {
        self.mul(&Monomial::var(i))
    }

    /// Divide by `z_i`, or `None` when the exponent of `z_i` is zero.
    pub fn div_var(&self, i: u32) -> Option<Monomial> {
        if self.exponent(i) == 0 {
            return None;
        }
        let pairs: Vec<(u32, u32)> = self
            .exps
            .iter()
            .map(|&(v, e)| if v == i { (v, e - 1) } else { (v, e) })
            .collect();
        Some(Monomial::from_pairs(&pairs))
    }

    /// The Drury-Arveson weight `alpha! / |alpha|!` of `z^alpha`, exactly.
    pub fn fock_weight(&self) -> BigRational {
        let mut num = BigInt::one();
        for &(_, e) in &self.exps {
            num *= factorial(e);
        }
        BigRational::new(num, factorial(self.degree))
    }
}

fn factorial(n: u32) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    acc
}

/// Graded lexicographic order, enumerated ascending: lower total degree
/// first; within a degree, a larger exponent on an earlier variable sorts
/// first (`z1^2 < z1*z2 < z2^2`).
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree.cmp(&other.degree) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let (mut a, mut b) = (self.exps.iter().peekable(), other.exps.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&(va, ea)), Some(&&(vb, eb))) => {
                    if va != vb {
                        // the one whose earliest variable is smaller has a
                        // positive exponent where the other has zero
                        return va.cmp(&vb);
                    }
                    if ea != eb {
                        return eb.cmp(&ea);
                    }
                    a.next();
                    b.next();
                }
                (Some(_), None) | (None, Some(_)) => unreachable!("equal degrees exhaust together"),
                (None, None) => return Ordering::Equal,
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for &(v, e) in &self.exps {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "z{v}")?;
            } else {
                write!(f, "z{v}^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grlex_order_matches_basis_enumeration() {
        let one = Monomial::one();
        let z1 = Monomial::var(1);
        let z2 = Monomial::var(2);
        let z1sq = z1.mul(&z1);
        let z1z2 = z1.mul(&z2);
        let z2sq = z2.mul(&z2);
        let mut v = vec![
            z2sq.clone(),
            z1z2.clone(),
            one.clone(),
            z1sq.clone(),
            z2.clone(),
            z1.clone(),
        ];
        v.sort();
        assert_eq!(v, vec![one, z1, z2, z1sq, z1z2, z2sq]);
    }

    #[test]
    fn fock_weights() {
        // ||z1*z2||^2 = 1!1!/2! = 1/2
        let z1z2 = Monomial::from_pairs(&[(1, 1), (2, 1)]);
        assert_eq!(z1z2.fock_weight(), BigRational::new(1.into(), 2.into()));
        // single-variable monomials have weight 1
        let z1cubed = Monomial::from_pairs(&[(1, 3)]);
        assert_eq!(z1cubed.fock_weight(), BigRational::one());
        // ||z1^2 z2||^2 = 2!/3! = 1/3
        let m = Monomial::from_pairs(&[(1, 2), (2, 1)]);
        assert_eq!(m.fock_weight(), BigRational::new(1.into(), 3.into()));
    }

    #[test]
    fn division() {
        let a = Monomial::from_pairs(&[(1, 2), (3, 1)]);
        let b = Monomial::from_pairs(&[(1, 1)]);
        assert!(b.divides(&a));
        assert!(!a.divides(&b));
        assert_eq!(b.div_into(&a), Monomial::from_pairs(&[(1, 1), (3, 1)]));
    }
}
