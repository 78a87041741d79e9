//! Sparse multivariate polynomial arithmetic over exact rationals.
//!
//! Terms are a map from dense fixed-arity exponent vectors to nonzero
//! coefficients; every operation canonicalizes by dropping zeros. The
//! variable universe for symmetric-function work is ordered
//! `a_1..a_m, b_1..b_m, μ_1..μ_s`; [`VarSpace`] carries that naming.

use std::collections::HashMap;

use num_traits::Zero;

use crate::scalar::{rat_int, Rational};

/// Naming scheme for the variables `a_1..a_m, b_1..b_m, μ_1..μ_s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VarSpace {
    pub m: usize,
    pub s: usize,
}

impl VarSpace {
    pub fn new(m: usize, s: usize) -> Self {
        VarSpace { m, s }
    }

    pub fn arity(&self) -> usize {
        2 * self.m + self.s
    }

    /// Index of `a_i` (1-based `i`).
    pub fn a(&self, i: usize) -> usize {
        debug_assert!(1 <= i && i <= self.m);
        i - 1
    }

    /// Index of `b_i` (1-based `i`).
    pub fn b(&self, i: usize) -> usize {
        debug_assert!(1 <= i && i <= self.m);
        self.m + i - 1
    }

    /// Index of `μ_j` (1-based `j`).
    pub fn mu(&self, j: usize) -> usize {
        debug_assert!(1 <= j && j <= self.s);
        2 * self.m + j - 1
    }

    pub fn var_name(&self, idx: usize) -> String {
        if idx < self.m {
            format!("a{}", idx + 1)
        } else if idx < 2 * self.m {
            format!("b{}", idx - self.m + 1)
        } else {
            format!("mu{}", idx - 2 * self.m + 1)
        }
    }
}

/// Sparse multivariate polynomial with exact rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MPoly {
    arity: usize,
    terms: HashMap<Vec<u32>, Rational>,
}

impl MPoly {
    pub fn zero(arity: usize) -> Self {
        MPoly {
            arity,
            terms: HashMap::new(),
        }
    }

    pub fn constant(arity: usize, c: Rational) -> Self {
        let mut p = MPoly::zero(arity);
        if !c.is_zero() {
            p.terms.insert(vec![0; arity], c);
        }
        p
    }

    pub fn one(arity: usize) -> Self {
        MPoly::constant(arity, rat_int(1))
    }

    /// The monomial `x_idx`.
    pub fn var(arity: usize, idx: usize) -> Self {
        assert!(idx < arity);
        let mut exps = vec![0; arity];
        exps[idx] = 1;
        let mut p = MPoly::zero(arity);
        p.terms.insert(exps, rat_int(1));
        p
    }

    /// A single term `c · x^exps`.
    pub fn monomial(exps: Vec<u32>, c: Rational) -> Self {
        let mut p = MPoly::zero(exps.len());
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    /// Coefficient of the given exponent vector (zero when absent).
    pub fn coeff(&self, exps: &[u32]) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    fn insert_add(&mut self, exps: Vec<u32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::hash_map::Entry;
        match self.terms.entry(exps) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn add_assign(&mut self, rhs: &MPoly) {
        assert_eq!(self.arity, rhs.arity);
        for (exps, c) in &rhs.terms {
            self.insert_add(exps.clone(), c.clone());
        }
    }

    pub fn add(&self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        out.add_assign(rhs);
        out
    }

    pub fn sub(&self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (exps, c) in &rhs.terms {
            out.insert_add(exps.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> MPoly {
        MPoly {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(self.arity);
        }
        MPoly {
            arity: self.arity,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    pub fn mul(&self, rhs: &MPoly) -> MPoly {
        assert_eq!(self.arity, rhs.arity);
        let mut out = MPoly::zero(self.arity);
        let (small, large) = if self.terms.len() <= rhs.terms.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        for (ea, ca) in &small.terms {
            for (eb, cb) in &large.terms {
                let exps: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.insert_add(exps, ca * cb);
            }
        }
        out
    }

    pub fn square(&self) -> MPoly {
        self.mul(self)
    }

    /// Evaluation at a rational point.
    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.arity);
        let mut acc = Rational::zero();
        for (exps, c) in &self.terms {
            let mut term = c.clone();
            for (x, &e) in point.iter().zip(exps) {
                for _ in 0..e {
                    term *= x;
                }
            }
            acc += term;
        }
        acc
    }

    /// Coefficient of `target` in the product `self · rhs`, computed by
    /// exponent-splitting without expanding the product.
    pub fn coeff_in_product(&self, rhs: &MPoly, target: &[u32]) -> Rational {
        assert_eq!(self.arity, rhs.arity);
        assert_eq!(target.len(), self.arity);
        let mut acc = Rational::zero();
        for (exps, c) in &self.terms {
            if exps.iter().zip(target).all(|(e, t)| e <= t) {
                let rest: Vec<u32> = target.iter().zip(exps).map(|(t, e)| t - e).collect();
                if let Some(d) = rhs.terms.get(&rest) {
                    acc += c * d;
                }
            }
        }
        acc
    }

    /// Total degree of each stored term's exponent vector, maximized.
    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    /// Terms sorted in graded lexicographic order, highest first: compare
    /// total degree, then the exponent vector lexicographically.
    pub fn sorted_terms(&self) -> Vec<(Vec<u32>, Rational)> {
        let mut v: Vec<(Vec<u32>, Rational)> = self
            .terms
            .iter()
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect();
        v.sort_by(|(ea, _), (eb, _)| {
            let da: u32 = ea.iter().sum();
            let db: u32 = eb.iter().sum();
            db.cmp(&da).then_with(|| eb.cmp(ea))
        });
        v
    }

    /// Canonical text form, one term per line: `coef * a1^2 b1 ...` in
    /// graded lexicographic order. Deterministic.
    pub fn canonical_lines(&self, vars: &VarSpace) -> Vec<String> {
        assert_eq!(vars.arity(), self.arity);
        self.sorted_terms()
            .into_iter()
            .map(|(exps, c)| {
                let mut parts = Vec::new();
                for (idx, &e) in exps.iter().enumerate() {
                    match e {
                        0 => {}
                        1 => parts.push(vars.var_name(idx)),
                        _ => parts.push(format!("{}^{}", vars.var_name(idx), e)),
                    }
                }
                if parts.is_empty() {
                    format!("{c}")
                } else {
                    format!("{c} * {}", parts.join(" "))
                }
            })
            .collect()
    }
}

/// Elementary symmetric polynomials `e_0..e_upto` of the given polynomial
/// entries, by the incremental one-entry fold.
pub fn esf_of_polys(arity: usize, entries: &[MPoly], upto: usize) -> Vec<MPoly> {
    let mut e = vec![MPoly::one(arity)];
    for entry in entries {
        assert_eq!(entry.arity(), arity);
        if e.len() <= upto {
            e.push(MPoly::zero(arity));
        }
        for i in (1..e.len()).rev() {
            let add = e[i - 1].mul(entry);
            e[i].add_assign(&add);
        }
    }
    while e.len() <= upto {
        e.push(MPoly::zero(arity));
    }
    e
}
