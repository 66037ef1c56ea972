//! Exponent multisets: monomial keys, ket contents and fraction exponents.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::basis::Label;
use crate::scalar::{binomial, factorial};

/// Finitely supported map `Label → positive integer`. Zero exponents are
/// never stored.
///
/// Ordered by total degree (highest first), then graded-lex with earlier
/// labels weighing more, so `x1² > x1·x2 > x2² > x1 > 1`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Multiindex {
    exps: BTreeMap<Label, u32>,
}

impl Multiindex {
    pub fn one() -> Self {
        Multiindex::default()
    }

    pub fn single(label: impl Into<Label>, exp: u32) -> Self {
        let mut m = Multiindex::one();
        if exp > 0 {
            m.exps.insert(label.into(), exp);
        }
        m
    }

    /// Multiset of the given labels; repeats add up.
    pub fn from_labels<'a>(labels: impl IntoIterator<Item = &'a Label>) -> Self {
        let mut m = Multiindex::one();
        for l in labels {
            m.raise(l);
        }
        m
    }

    pub fn from_exps(exps: impl IntoIterator<Item = (Label, u32)>) -> Self {
        let mut m = Multiindex::one();
        for (l, e) in exps {
            if e > 0 {
                *m.exps.entry(l).or_insert(0) += e;
            }
        }
        m
    }

    pub fn get(&self, label: &Label) -> u32 {
        self.exps.get(label).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Label, u32)> {
        self.exps.iter().map(|(l, e)| (l, *e))
    }

    pub fn labels(&self) -> impl Iterator<Item = &Label> {
        self.exps.keys()
    }

    pub fn degree(&self) -> u32 {
        self.exps.values().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn raise(&mut self, label: &Label) {
        *self.exps.entry(label.clone()).or_insert(0) += 1;
    }

    pub fn raised(&self, label: &Label) -> Self {
        let mut m = self.clone();
        m.raise(label);
        m
    }

    /// Removes one copy of `label`; `None` if it does not occur.
    pub fn lowered(&self, label: &Label) -> Option<Self> {
        let e = self.get(label);
        if e == 0 {
            return None;
        }
        let mut m = self.clone();
        if e == 1 {
            m.exps.remove(label);
        } else {
            m.exps.insert(label.clone(), e - 1);
        }
        Some(m)
    }

    pub fn mul(&self, other: &Multiindex) -> Multiindex {
        let mut m = self.clone();
        for (l, e) in &other.exps {
            *m.exps.entry(l.clone()).or_insert(0) += e;
        }
        m
    }

    /// `self − other` when `other ≤ self` componentwise.
    pub fn checked_sub(&self, other: &Multiindex) -> Option<Multiindex> {
        let mut m = self.clone();
        for (l, e) in &other.exps {
            let have = m.get(l);
            if have < *e {
                return None;
            }
            if have == *e {
                m.exps.remove(l);
            } else {
                m.exps.insert(l.clone(), have - e);
            }
        }
        Some(m)
    }

    /// The labels with multiplicity, in label order: `{e1:2, e3:1}` gives
    /// `[e1, e1, e3]`.
    pub fn expand(&self) -> Vec<Label> {
        self.exps
            .iter()
            .flat_map(|(l, e)| std::iter::repeat_n(l.clone(), *e as usize))
            .collect()
    }

    /// `a_1! ⋯ a_n!`
    pub fn factorial(&self) -> BigInt {
        self.exps
            .values()
            .fold(BigInt::one(), |acc, e| acc * factorial(*e))
    }

    /// `Π_i C(a_i, b_i)` for `b ≤ a`.
    pub fn binomial(&self, sub: &Multiindex) -> BigInt {
        self.exps
            .iter()
            .fold(BigInt::one(), |acc, (l, e)| acc * binomial(*e, sub.get(l)))
    }

    /// Every `b` with `0 ≤ b ≤ self`, each exactly once.
    pub fn divisors(&self) -> Vec<Multiindex> {
        let mut out = vec![Multiindex::one()];
        for (l, e) in &self.exps {
            let mut next = Vec::with_capacity(out.len() * (*e as usize + 1));
            for m in &out {
                for k in 0..=*e {
                    let mut m = m.clone();
                    if k > 0 {
                        m.exps.insert(l.clone(), k);
                    }
                    next.push(m);
                }
            }
            out = next;
        }
        out
    }
}

impl Ord for Multiindex {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .degree()
            .cmp(&self.degree())
            .then_with(|| grlex_tail(self, other))
    }
}

impl PartialOrd for Multiindex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn grlex_tail(a: &Multiindex, b: &Multiindex) -> Ordering {
    let mut ia = a.exps.iter();
    let mut ib = b.exps.iter();
    loop {
        match (ia.next(), ib.next()) {
            (None, None) => return Ordering::Equal,
            (Some(_), None) => return Ordering::Less,
            (None, Some(_)) => return Ordering::Greater,
            (Some((la, ea)), Some((lb, eb))) => match la.cmp(lb) {
                Ordering::Less => return Ordering::Less,
                Ordering::Greater => return Ordering::Greater,
                Ordering::Equal => match eb.cmp(ea) {
                    Ordering::Equal => continue,
                    o => return o,
                },
            },
        }
    }
}

/// `e1^2 e3`; the empty multiset renders as `0` (the vacuum label).
impl fmt::Display for Multiindex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("0");
        }
        for (i, (l, e)) in self.exps.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            if *e == 1 {
                write!(f, "{l}")?;
            } else {
                write!(f, "{l}^{e}")?;
            }
        }
        Ok(())
    }
}
