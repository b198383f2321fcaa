//! Exact grid-valued fuzzy sets.
//!
//! Membership degrees live on the grid `{0, 1/k, ..., 1}` for a denominator
//! `k` fixed per space. Every value is stored as its integer numerator, so
//! the boundary comparisons that quasi-coincidence depends on (`t + μ(y) > 1`
//! versus `= 1`) are exact. The grid is closed under complement, min, max,
//! the Łukasiewicz sum and product, and truncated difference, so no
//! operation here ever rounds.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, BitAnd, BitOr, Mul, Not, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default cap on the number of sets a lattice enumeration may produce.
pub const DEFAULT_LATTICE_BUDGET: usize = 1 << 16;

/// The shape of a grid lattice: `n` universe elements and denominator `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Space {
    n: usize,
    k: u32,
}

impl Space {
    pub fn new(n: usize, k: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidSpace("universe must be non-empty".into()));
        }
        if k == 0 {
            return Err(Error::InvalidSpace("denominator must be at least 1".into()));
        }
        Ok(Space { n, k })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// `(k+1)^n`, without overflow.
    pub fn lattice_size(&self) -> u128 {
        let base = u128::from(self.k) + 1;
        let mut acc: u128 = 1;
        for _ in 0..self.n {
            acc = acc.saturating_mul(base);
        }
        acc
    }

    pub fn check_budget(&self, budget: usize) -> Result<()> {
        let needed = self.lattice_size();
        if needed > budget as u128 {
            return Err(Error::BudgetExceeded { needed, budget });
        }
        Ok(())
    }

    pub fn zero(&self) -> FuzzySet {
        self.constant(0)
    }

    pub fn one(&self) -> FuzzySet {
        self.constant(self.k)
    }

    /// The constant set with value `numerator/k` everywhere.
    ///
    /// Panics if `numerator > k`.
    pub fn constant(&self, numerator: u32) -> FuzzySet {
        assert!(
            numerator <= self.k,
            "constant {numerator} above denominator {}",
            self.k
        );
        FuzzySet {
            k: self.k,
            values: vec![numerator; self.n],
        }
    }

    pub fn set(&self, numerators: Vec<u32>) -> Result<FuzzySet> {
        if numerators.len() != self.n {
            return Err(Error::InvalidSpace(format!(
                "vector of length {} in a universe of {} elements",
                numerators.len(),
                self.n
            )));
        }
        FuzzySet::new(self.k, numerators)
    }

    pub fn point(&self, support: usize, numerator: u32) -> Result<FuzzyPoint> {
        if support >= self.n {
            return Err(Error::InvalidSpace(format!(
                "point support {support} outside a universe of {} elements",
                self.n
            )));
        }
        FuzzyPoint::new(support, GridValue::new(numerator, self.k)?)
    }

    /// All `n·k` fuzzy points, ordered by support then value.
    pub fn points(&self) -> impl Iterator<Item = FuzzyPoint> + '_ {
        let k = self.k;
        (0..self.n).flat_map(move |y| {
            (1..=k).map(move |t| FuzzyPoint {
                support: y,
                value: GridValue { num: t, den: k },
            })
        })
    }

    /// Streams every grid set in lexicographic order.
    pub fn enumerate(&self, budget: usize) -> Result<LatticeIter> {
        self.check_budget(budget)?;
        Ok(LatticeIter {
            space: *self,
            next: Some(vec![0; self.n]),
        })
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}, k={}", self.n, self.k)
    }
}

/// A membership degree `num/den` with `0 <= num <= den`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GridValue {
    num: u32,
    den: u32,
}

impl GridValue {
    pub fn new(num: u32, den: u32) -> Result<Self> {
        if den == 0 || num > den {
            return Err(Error::InvalidGridValue {
                numerator: u64::from(num),
                denominator: den,
            });
        }
        Ok(GridValue { num, den })
    }

    pub fn numerator(&self) -> u32 {
        self.num
    }

    pub fn denominator(&self) -> u32 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub fn complement(self) -> Self {
        GridValue {
            num: self.den - self.num,
            den: self.den,
        }
    }

    fn check(self, other: Self) -> Result<()> {
        if self.den != other.den {
            return Err(Error::InvalidGridValue {
                numerator: u64::from(other.num),
                denominator: other.den,
            });
        }
        Ok(())
    }

    pub fn oplus(self, other: Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.with(lukasiewicz_sum(self.num, other.num, self.den)))
    }

    pub fn odot(self, other: Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.with(lukasiewicz_product(self.num, other.num, self.den)))
    }

    pub fn trunc_diff(self, other: Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.with(self.num.saturating_sub(other.num)))
    }

    pub fn min(self, other: Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.with(self.num.min(other.num)))
    }

    pub fn max(self, other: Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.with(self.num.max(other.num)))
    }

    fn with(self, num: u32) -> Self {
        GridValue { num, den: self.den }
    }
}

impl PartialOrd for GridValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        // cross-multiplied so values over different denominators still compare
        let lhs = u64::from(self.num) * u64::from(other.den);
        let rhs = u64::from(other.num) * u64::from(self.den);
        Some(lhs.cmp(&rhs))
    }
}

impl fmt::Display for GridValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

fn lukasiewicz_sum(a: u32, b: u32, k: u32) -> u32 {
    (a + b).min(k)
}

fn lukasiewicz_product(a: u32, b: u32, k: u32) -> u32 {
    (a + b).saturating_sub(k)
}

/// Ordered, non-empty list of distinct element labels.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Universe {
    labels: Vec<String>,
}

impl Universe {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::InvalidSpace("universe must be non-empty".into()));
        }
        let mut seen = HashMap::new();
        for (i, label) in labels.iter().enumerate() {
            if label.is_empty() || label.chars().any(char::is_whitespace) {
                return Err(Error::InvalidSpace(format!("invalid label {label:?}")));
            }
            if let Some(j) = seen.insert(label.as_str(), i) {
                return Err(Error::InvalidSpace(format!(
                    "label {label:?} repeated at positions {j} and {i}"
                )));
            }
        }
        Ok(Universe { labels })
    }

    /// Labels `y0, y1, ...`.
    pub fn numbered(n: usize) -> Self {
        Universe {
            labels: (0..n).map(|i| format!("y{i}")).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn position(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

/// A grid fuzzy set, stored as numerators over a shared denominator.
///
/// The derived ordering is lexicographic on the value vector and is only the
/// canonical storage order. Fuzzy inclusion is [`FuzzySet::leq`] /
/// [`FuzzySet::is_subset`].
///
/// The operator impls (`&`, `|`, `!`, `+`, `*`, `-`) are meet, join,
/// complement, Łukasiewicz sum, Łukasiewicz product and truncated
/// difference. They panic when the operands come from different spaces; the
/// named methods return [`Error::SpaceMismatch`] instead.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FuzzySet {
    k: u32,
    values: Vec<u32>,
}

impl FuzzySet {
    pub fn new(k: u32, values: Vec<u32>) -> Result<Self> {
        if k == 0 || values.is_empty() {
            return Err(Error::InvalidSpace(format!(
                "cannot build a set with k={k} over {} elements",
                values.len()
            )));
        }
        if let Some(&bad) = values.iter().find(|&&v| v > k) {
            return Err(Error::InvalidGridValue {
                numerator: u64::from(bad),
                denominator: k,
            });
        }
        Ok(FuzzySet { k, values })
    }

    pub fn space(&self) -> Space {
        Space {
            n: self.values.len(),
            k: self.k,
        }
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn numerators(&self) -> &[u32] {
        &self.values
    }

    pub fn value(&self, y: usize) -> GridValue {
        GridValue {
            num: self.values[y],
            den: self.k,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    pub fn is_one(&self) -> bool {
        self.values.iter().all(|&v| v == self.k)
    }

    /// Indices with non-zero membership.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.values
            .iter()
            .enumerate()
            .filter(|(_, &v)| v > 0)
            .map(|(i, _)| i)
    }

    pub(crate) fn same_space(&self, other: &Self) -> Result<()> {
        if self.k != other.k || self.values.len() != other.values.len() {
            return Err(Error::SpaceMismatch {
                left: self.space(),
                right: other.space(),
            });
        }
        Ok(())
    }

    fn zip_with(&self, other: &Self, f: impl Fn(u32, u32) -> u32) -> FuzzySet {
        assert!(
            self.k == other.k && self.values.len() == other.values.len(),
            "fuzzy sets from different spaces ({} vs {})",
            self.space(),
            other.space()
        );
        FuzzySet {
            k: self.k,
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    fn checked(&self, other: &Self, f: impl Fn(u32, u32) -> u32) -> Result<FuzzySet> {
        self.same_space(other)?;
        Ok(self.zip_with(other, f))
    }

    pub fn complement(&self) -> FuzzySet {
        FuzzySet {
            k: self.k,
            values: self.values.iter().map(|&v| self.k - v).collect(),
        }
    }

    pub fn meet(&self, other: &Self) -> Result<FuzzySet> {
        self.checked(other, u32::min)
    }

    pub fn join(&self, other: &Self) -> Result<FuzzySet> {
        self.checked(other, u32::max)
    }

    /// `min(λ(y) + μ(y), 1)`.
    pub fn oplus(&self, other: &Self) -> Result<FuzzySet> {
        let k = self.k;
        self.checked(other, move |a, b| lukasiewicz_sum(a, b, k))
    }

    /// `max(λ(y) + μ(y) - 1, 0)`.
    pub fn odot(&self, other: &Self) -> Result<FuzzySet> {
        let k = self.k;
        self.checked(other, move |a, b| lukasiewicz_product(a, b, k))
    }

    /// The two-case bounded sum: `λ(y) + μ(y)` when that stays within 1,
    /// otherwise 1. On the grid this coincides with [`FuzzySet::oplus`].
    pub fn bounded_sum(&self, other: &Self) -> Result<FuzzySet> {
        let k = self.k;
        self.checked(other, move |a, b| if a + b <= k { a + b } else { k })
    }

    /// `λ(y) - μ(y)` where positive, else 0.
    pub fn trunc_diff(&self, other: &Self) -> Result<FuzzySet> {
        self.checked(other, |a, b| a.saturating_sub(b))
    }

    pub fn leq(&self, other: &Self) -> Result<bool> {
        self.same_space(other)?;
        Ok(self.is_subset(other))
    }

    /// Pointwise `<=`. Panics on a space mismatch.
    pub fn is_subset(&self, other: &Self) -> bool {
        assert_eq!(
            self.space(),
            other.space(),
            "fuzzy sets from different spaces"
        );
        self.values.iter().zip(&other.values).all(|(a, b)| a <= b)
    }

    /// Quasi-coincidence: some `y` with `λ(y) + μ(y) > 1`.
    pub fn quasi(&self, other: &Self) -> Result<bool> {
        self.same_space(other)?;
        Ok(self.quasi_at(other).is_some())
    }

    /// First element witnessing quasi-coincidence, if any.
    pub fn quasi_at(&self, other: &Self) -> Option<usize> {
        self.values
            .iter()
            .zip(&other.values)
            .position(|(&a, &b)| a + b > self.k)
    }

    /// Position in the lexicographic enumeration of the lattice.
    pub fn lattice_index(&self) -> usize {
        let base = self.k as usize + 1;
        self.values
            .iter()
            .fold(0, |acc, &v| acc * base + v as usize)
    }

    pub fn with_value(&self, y: usize, numerator: u32) -> Result<FuzzySet> {
        let mut values = self.values.clone();
        *values
            .get_mut(y)
            .ok_or_else(|| Error::InvalidSpace(format!("no element {y}")))? = numerator;
        FuzzySet::new(self.k, values)
    }
}

impl fmt::Display for FuzzySet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]/{}", self.k)
    }
}

impl Not for &FuzzySet {
    type Output = FuzzySet;
    fn not(self) -> FuzzySet {
        self.complement()
    }
}

impl BitAnd for &FuzzySet {
    type Output = FuzzySet;
    fn bitand(self, rhs: &FuzzySet) -> FuzzySet {
        self.zip_with(rhs, u32::min)
    }
}

impl BitOr for &FuzzySet {
    type Output = FuzzySet;
    fn bitor(self, rhs: &FuzzySet) -> FuzzySet {
        self.zip_with(rhs, u32::max)
    }
}

impl Add for &FuzzySet {
    type Output = FuzzySet;
    fn add(self, rhs: &FuzzySet) -> FuzzySet {
        let k = self.k;
        self.zip_with(rhs, move |a, b| lukasiewicz_sum(a, b, k))
    }
}

impl Mul for &FuzzySet {
    type Output = FuzzySet;
    fn mul(self, rhs: &FuzzySet) -> FuzzySet {
        let k = self.k;
        self.zip_with(rhs, move |a, b| lukasiewicz_product(a, b, k))
    }
}

impl Sub for &FuzzySet {
    type Output = FuzzySet;
    fn sub(self, rhs: &FuzzySet) -> FuzzySet {
        self.zip_with(rhs, |a, b| a.saturating_sub(b))
    }
}

/// Meet of a non-empty collection; `None` when empty.
pub fn meet_all<'a>(sets: impl IntoIterator<Item = &'a FuzzySet>) -> Option<FuzzySet> {
    sets.into_iter().fold(None, |acc, s| match acc {
        None => Some(s.clone()),
        Some(a) => Some(&a & s),
    })
}

/// Join of a non-empty collection; `None` when empty.
pub fn join_all<'a>(sets: impl IntoIterator<Item = &'a FuzzySet>) -> Option<FuzzySet> {
    sets.into_iter().fold(None, |acc, s| match acc {
        None => Some(s.clone()),
        Some(a) => Some(&a | s),
    })
}

/// A fuzzy point `y_t` with `t` a positive grid value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FuzzyPoint {
    support: usize,
    value: GridValue,
}

impl FuzzyPoint {
    pub fn new(support: usize, value: GridValue) -> Result<Self> {
        if value.is_zero() {
            return Err(Error::InvalidGridValue {
                numerator: 0,
                denominator: value.den,
            });
        }
        Ok(FuzzyPoint { support, value })
    }

    pub fn support(&self) -> usize {
        self.support
    }

    pub fn value(&self) -> GridValue {
        self.value
    }

    pub fn t(&self) -> u32 {
        self.value.num
    }

    fn check(&self, set: &FuzzySet) -> Result<()> {
        if self.value.den != set.k || self.support >= set.len() {
            return Err(Error::SpaceMismatch {
                left: Space {
                    n: self.support + 1,
                    k: self.value.den,
                },
                right: set.space(),
            });
        }
        Ok(())
    }

    /// `y_t ∈ λ` iff `t <= λ(y)`.
    pub fn is_in(&self, set: &FuzzySet) -> Result<bool> {
        self.check(set)?;
        Ok(self.t() <= set.values[self.support])
    }

    /// `y_t ≺ λ` iff `t + λ(y) > 1`.
    pub fn quasi(&self, set: &FuzzySet) -> Result<bool> {
        self.check(set)?;
        Ok(self.quasi_unchecked(set))
    }

    pub(crate) fn quasi_unchecked(&self, set: &FuzzySet) -> bool {
        self.t() + set.values[self.support] > set.k
    }

    /// The point as a fuzzy set over `n` elements.
    pub fn to_set(&self, n: usize) -> Result<FuzzySet> {
        let mut values = vec![0; n];
        *values
            .get_mut(self.support)
            .ok_or_else(|| Error::InvalidSpace(format!("no element {}", self.support)))? = self.t();
        FuzzySet::new(self.value.den, values)
    }
}

impl fmt::Display for FuzzyPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "y{}@{}", self.support, self.value)
    }
}

/// Odometer over the lattice in lexicographic order (last coordinate fastest).
#[derive(Debug, Clone)]
pub struct LatticeIter {
    space: Space,
    next: Option<Vec<u32>>,
}

impl Iterator for LatticeIter {
    type Item = FuzzySet;

    fn next(&mut self) -> Option<FuzzySet> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut carried = true;
        for v in succ.iter_mut().rev() {
            if *v < self.space.k {
                *v += 1;
                carried = false;
                break;
            }
            *v = 0;
        }
        if !carried {
            self.next = Some(succ);
        }
        Some(FuzzySet {
            k: self.space.k,
            values: current,
        })
    }
}

/// The materialized lattice `L_k^Y`, indexable by [`FuzzySet::lattice_index`].
#[derive(Debug, Clone)]
pub struct Lattice {
    space: Space,
    sets: Vec<FuzzySet>,
}

impl Lattice {
    pub fn new(space: Space, budget: usize) -> Result<Self> {
        let sets = space.enumerate(budget)?.collect();
        Ok(Lattice { space, sets })
    }

    pub fn space(&self) -> Space {
        self.space
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn sets(&self) -> &[FuzzySet] {
        &self.sets
    }

    pub fn iter(&self) -> std::slice::Iter<'_, FuzzySet> {
        self.sets.iter()
    }

    pub fn get(&self, index: usize) -> &FuzzySet {
        &self.sets[index]
    }

    /// Every lattice set below `upper`.
    pub fn below<'a>(&'a self, upper: &'a FuzzySet) -> impl Iterator<Item = &'a FuzzySet> + 'a {
        self.sets.iter().filter(move |s| s.is_subset(upper))
    }
}

impl<'a> IntoIterator for &'a Lattice {
    type Item = &'a FuzzySet;
    type IntoIter = std::slice::Iter<'a, FuzzySet>;
    fn into_iter(self) -> Self::IntoIter {
        self.sets.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(n: usize, k: u32) -> Space {
        Space::new(n, k).unwrap()
    }

    fn set(k: u32, v: &[u32]) -> FuzzySet {
        FuzzySet::new(k, v.to_vec()).unwrap()
    }

    #[test]
    fn complement_examples() {
        assert_eq!(set(2, &[0, 0]).complement(), set(2, &[2, 2]));
        assert_eq!(set(2, &[1, 1]).complement(), set(2, &[1, 1]));
        assert_eq!(set(2, &[2, 1]).complement(), set(2, &[0, 1]));
    }

    #[test]
    fn meet_join_examples() {
        let a = set(1, &[1, 0]);
        let b = set(1, &[0, 1]);
        assert_eq!(a.meet(&b).unwrap(), set(1, &[0, 0]));
        assert_eq!(a.join(&b).unwrap(), set(1, &[1, 1]));
        let l = set(3, &[2, 1]);
        assert_eq!(l.meet(&sp(2, 3).one()).unwrap(), l);
    }

    #[test]
    fn lukasiewicz_examples() {
        assert_eq!(
            set(2, &[1, 1]).oplus(&set(2, &[1, 2])).unwrap(),
            set(2, &[2, 2])
        );
        let l = set(4, &[3, 1]);
        assert_eq!(l.oplus(&sp(2, 4).zero()).unwrap(), l);
        assert_eq!(
            set(4, &[1, 0]).oplus(&set(4, &[1, 2])).unwrap(),
            set(4, &[2, 2])
        );

        assert_eq!(
            set(2, &[1, 1]).odot(&set(2, &[1, 2])).unwrap(),
            set(2, &[0, 1])
        );
        assert_eq!(l.odot(&sp(2, 4).one()).unwrap(), l);
        assert_eq!(
            set(1, &[1, 1]).odot(&set(1, &[1, 1])).unwrap(),
            set(1, &[1, 1])
        );
    }

    #[test]
    fn bounded_sum_and_difference_examples() {
        assert_eq!(
            set(2, &[2, 1]).trunc_diff(&set(2, &[1, 1])).unwrap(),
            set(2, &[1, 0])
        );
        let l = set(3, &[3, 1]);
        assert_eq!(l.trunc_diff(&l).unwrap(), sp(2, 3).zero());
        assert_eq!(l.trunc_diff(&sp(2, 3).one().complement()).unwrap(), l);
        assert_eq!(
            set(2, &[1, 2]).bounded_sum(&set(2, &[2, 0])).unwrap(),
            set(2, &[2, 2])
        );
    }

    #[test]
    fn inclusion_examples() {
        let l = set(2, &[1, 2]);
        assert!(sp(2, 2).zero().leq(&l).unwrap());
        assert!(!set(2, &[1, 2]).leq(&set(2, &[2, 1])).unwrap());
        assert!(l.leq(&l).unwrap());
    }

    #[test]
    fn point_membership_and_quasi_coincidence() {
        let s = sp(2, 2);
        let half = s.point(0, 1).unwrap();
        let full = s.point(0, 2).unwrap();
        let l = set(2, &[1, 0]);
        assert!(half.is_in(&l).unwrap());
        assert!(!full.is_in(&l).unwrap());
        for p in s.points() {
            assert!(p.is_in(&s.one()).unwrap());
        }
        assert!(!half.quasi(&l).unwrap());
        assert!(full.quasi(&l).unwrap());
        for l in s.enumerate(100).unwrap() {
            assert!(!l.quasi(&l.complement()).unwrap());
        }
    }

    #[test]
    fn zero_valued_point_is_rejected() {
        assert!(sp(1, 2).point(0, 0).is_err());
        assert!(sp(1, 2).point(1, 1).is_err());
        assert!(sp(1, 2).point(0, 3).is_err());
    }

    #[test]
    fn enumeration_examples() {
        let one: Vec<_> = sp(1, 1).enumerate(10).unwrap().collect();
        assert_eq!(one, vec![set(1, &[0]), set(1, &[1])]);
        let two: Vec<_> = sp(1, 2).enumerate(10).unwrap().collect();
        assert_eq!(two, vec![set(2, &[0]), set(2, &[1]), set(2, &[2])]);
        let nine: Vec<_> = sp(2, 2).enumerate(10).unwrap().collect();
        assert_eq!(nine.len(), 9);
        assert_eq!(nine[0], set(2, &[0, 0]));
        assert_eq!(nine[8], set(2, &[2, 2]));
        let mut sorted = nine.clone();
        sorted.sort();
        assert_eq!(sorted, nine);
        for (i, s) in nine.iter().enumerate() {
            assert_eq!(s.lattice_index(), i);
        }
    }

    #[test]
    fn enumeration_respects_budget() {
        assert!(matches!(
            sp(3, 4).enumerate(100),
            Err(Error::BudgetExceeded {
                needed: 125,
                budget: 100
            })
        ));
        assert_eq!(sp(40, 9).lattice_size(), 10u128.pow(38).saturating_mul(100));
    }

    #[test]
    fn mismatched_spaces_error() {
        let a = set(2, &[1, 1]);
        let b = set(3, &[1, 1]);
        let c = set(2, &[1]);
        assert!(matches!(a.meet(&b), Err(Error::SpaceMismatch { .. })));
        assert!(a.oplus(&c).is_err());
        assert!(a.leq(&c).is_err());
        assert!(sp(1, 3).point(0, 1).unwrap().is_in(&a).is_err());
    }

    #[test]
    fn grid_value_arithmetic() {
        let h = GridValue::new(1, 2).unwrap();
        let one = GridValue::new(2, 2).unwrap();
        assert_eq!(h.oplus(h).unwrap(), one);
        assert_eq!(h.odot(h).unwrap().numerator(), 0);
        assert_eq!(one.trunc_diff(h).unwrap(), h);
        assert_eq!(h.complement(), h);
        assert!(GridValue::new(3, 2).is_err());
        assert!(GridValue::new(1, 4).unwrap() < h);
        assert!(h.oplus(GridValue::new(1, 3).unwrap()).is_err());
    }

    #[test]
    fn universe_labels_must_be_distinct() {
        assert!(Universe::new(["a", "b"]).is_ok());
        assert!(Universe::new(["a", "a"]).is_err());
        assert!(Universe::new(Vec::<String>::new()).is_err());
        assert_eq!(Universe::numbered(2).position("y1"), Some(1));
    }
}
