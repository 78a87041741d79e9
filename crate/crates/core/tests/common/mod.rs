//! Shared test oracles, independent of the library's computation paths.

use newtonineq::scalar::Rational;
use newtonineq::SelfConjugateList;
use num_traits::Zero;

/// Complex rational, just enough for the brute-force expansion oracle.
#[derive(Debug, Clone, PartialEq)]
pub struct CRat {
    pub re: Rational,
    pub im: Rational,
}

impl CRat {
    pub fn new(re: Rational, im: Rational) -> Self {
        CRat { re, im }
    }

    pub fn zero() -> Self {
        CRat::new(Rational::zero(), Rational::zero())
    }

    pub fn add(&self, rhs: &CRat) -> CRat {
        CRat::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }

    pub fn mul(&self, rhs: &CRat) -> CRat {
        CRat::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

/// All entries of the list as complex numbers: each pair contributes
/// `a + ib` and `a − ib`, each real contributes itself.
pub fn complex_entries(list: &SelfConjugateList) -> Vec<CRat> {
    assert!(list.tau().is_none(), "oracle works on numeric lists");
    let mut out = Vec::with_capacity(list.n());
    for (a, b) in list.pairs() {
        out.push(CRat::new(a.clone(), b.clone()));
        out.push(CRat::new(a.clone(), -b.clone()));
    }
    for mu in list.reals() {
        out.push(CRat::new(mu.clone(), Rational::zero()));
    }
    out
}

/// Brute-force oracle: expands `prod (x + z_j)` over the individual
/// complex entries with exact complex-rational arithmetic and reads off
/// the coefficients. Asserts every imaginary part cancels.
pub fn brute_force_esf(list: &SelfConjugateList) -> Vec<Rational> {
    let entries = complex_entries(list);
    let mut e = vec![CRat::new(
        Rational::from_integer(1.into()),
        Rational::zero(),
    )];
    for z in &entries {
        e.push(CRat::zero());
        for i in (1..e.len()).rev() {
            let add = e[i - 1].mul(z);
            e[i] = e[i].add(&add);
        }
    }
    e.into_iter()
        .map(|c| {
            assert!(c.im.is_zero(), "self-conjugate list must give real e_k");
            c.re
        })
        .collect()
}
