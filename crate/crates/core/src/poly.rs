//! Sparse multivariate polynomials `k[x_i]`, one variable per basis label,
//! and the constant-coefficient differential operators acting on them.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::basis::Label;
use crate::multiindex::Multiindex;
use crate::scalar::Rational;
use crate::vector::Vector;

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    terms: BTreeMap<Multiindex, Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::monomial(Multiindex::one(), c)
    }

    /// The coordinate function `x_label`.
    pub fn var(label: impl Into<Label>) -> Self {
        Polynomial::monomial(Multiindex::single(label, 1), Rational::one())
    }

    pub fn monomial(exps: Multiindex, c: Rational) -> Self {
        let mut p = Polynomial::zero();
        p.add_term(exps, c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Multiindex, Rational)>) -> Self {
        let mut p = Polynomial::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, exps: Multiindex, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exps.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Multiindex, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &Multiindex) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `-1` for the zero polynomial.
    pub fn degree(&self) -> i64 {
        self.terms
            .keys()
            .map(|m| i64::from(m.degree()))
            .max()
            .unwrap_or(-1)
    }

    /// Labels of every variable that occurs.
    pub fn variables(&self) -> std::collections::BTreeSet<Label> {
        self.terms
            .keys()
            .flat_map(|m| m.labels().cloned())
            .collect()
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, x)| (m.clone(), x * c))
                .collect(),
        }
    }

    /// Value at `point`; labels absent from `point` read as 0.
    pub fn eval(&self, point: &Vector) -> Rational {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (l, e) in m.iter() {
                let x = point.get(l);
                if x.is_zero() {
                    term = Rational::zero();
                    break;
                }
                term *= num_traits::pow(x, e as usize);
            }
            total += term;
        }
        total
    }

    /// `∂f/∂x_label`
    pub fn partial(&self, label: &Label) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let e = m.get(label);
            if e == 0 {
                continue;
            }
            let lowered = m.lowered(label).expect("exponent is positive");
            out.add_term(lowered, c * Rational::from_integer(e.into()));
        }
        out
    }

    /// `∂_ν f = Σ_i ν_i ∂f/∂x_i`
    pub fn directional(&self, direction: &Vector) -> Polynomial {
        let mut out = Polynomial::zero();
        for (l, c) in direction.iter() {
            out = &out + &self.partial(l).scale(c);
        }
        out
    }
}

/// `∂_{ν_1} ⋯ ∂_{ν_l} f`. The operators commute, so the order of `directions`
/// does not matter; an empty list is the identity.
pub fn apply_diff_op(directions: &[Vector], f: &Polynomial) -> Polynomial {
    let mut out = f.clone();
    for v in directions {
        if out.is_zero() {
            break;
        }
        out = out.directional(v);
    }
    out
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

/// Source syntax, e.g. `x.e1^2*x.e2 - 3/2`; zero renders as `0`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            for (j, (l, e)) in m.iter().enumerate() {
                if j > 0 {
                    f.write_str("*")?;
                }
                if e == 1 {
                    write!(f, "x.{l}")?;
                } else {
                    write!(f, "x.{l}^{e}")?;
                }
            }
        }
        Ok(())
    }
}
