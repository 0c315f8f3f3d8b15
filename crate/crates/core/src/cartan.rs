//! Cartan matrices of finite type.
//!
//! A [`CartanMatrix`] is a square integer matrix `a[s][t]` over labelled
//! nodes. Row index is the `s` of `a_{st} = <α_s^∨, α_t>`. Construction always
//! goes through [`CartanMatrix::new`], which checks the finite-type axioms, so
//! every value of the type is a valid finite-type matrix (possibly reducible).

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CartanError {
    #[error("matrix is not square or does not match the {labels} labels")]
    Shape { labels: usize },
    #[error("duplicate node label {0:?}")]
    DuplicateLabel(String),
    #[error("diagonal entry a[{0}][{0}] is not 2")]
    DiagonalNotTwo(String),
    #[error("off-diagonal entry a[{0}][{1}] is positive")]
    PositiveOffDiagonal(String, String),
    #[error("a[{0}][{1}] is zero but a[{1}][{0}] is not")]
    AsymmetricZero(String, String),
    #[error("not of finite type: {0}")]
    NotFiniteType(FiniteTypeViolation),
    #[error("unknown node label {0:?}")]
    UnknownLabel(String),
}

/// Why a matrix failed the finite-type test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FiniteTypeViolation {
    /// `a[s][t]·a[t][s] > 3`.
    BondProduct { s: String, t: String, product: i64 },
    /// The symmetrizer propagated along a cycle is inconsistent at `(s, t)`.
    NotSymmetrizable { s: String, t: String },
    /// The leading principal minor of this order of the symmetrized matrix is
    /// not positive.
    IndefiniteMinor { order: usize },
}

impl fmt::Display for FiniteTypeViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::BondProduct { s, t, product } => {
                write!(f, "bond product a[{s}][{t}]·a[{t}][{s}] = {product}")
            }
            Self::NotSymmetrizable { s, t } => write!(f, "not symmetrizable at ({s}, {t})"),
            Self::IndefiniteMinor { order } => {
                write!(
                    f,
                    "leading principal minor of order {order} is not positive"
                )
            }
        }
    }
}

/// A node of a Cartan matrix: a contiguous index and a display name.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct NodeLabel {
    pub id: usize,
    pub display: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CartanMatrix {
    labels: Vec<NodeLabel>,
    entries: Vec<Vec<i64>>,
}

impl CartanMatrix {
    /// Validates `raw` against the finite-type axioms.
    pub fn new<S: AsRef<str>>(raw: Vec<Vec<i64>>, labels: &[S]) -> Result<Self, CartanError> {
        let n = labels.len();
        if raw.len() != n || raw.iter().any(|row| row.len() != n) {
            return Err(CartanError::Shape { labels: n });
        }
        let labels: Vec<NodeLabel> = labels
            .iter()
            .enumerate()
            .map(|(id, l)| NodeLabel {
                id,
                display: l.as_ref().to_owned(),
            })
            .collect();
        let mut seen = BTreeSet::new();
        for l in &labels {
            if !seen.insert(l.display.as_str()) {
                return Err(CartanError::DuplicateLabel(l.display.clone()));
            }
        }
        let m = CartanMatrix {
            labels,
            entries: raw,
        };
        m.check_axioms()?;
        m.check_finite_type()?;
        Ok(m)
    }

    /// Labels `"1"..="n"`.
    pub fn with_numbered_labels(raw: Vec<Vec<i64>>) -> Result<Self, CartanError> {
        let labels: Vec<String> = (1..=raw.len()).map(|i| i.to_string()).collect();
        Self::new(raw, &labels)
    }

    fn name(&self, s: usize) -> String {
        self.labels[s].display.clone()
    }

    fn check_axioms(&self) -> Result<(), CartanError> {
        let n = self.rank();
        for s in 0..n {
            if self.entries[s][s] != 2 {
                return Err(CartanError::DiagonalNotTwo(self.name(s)));
            }
        }
        for s in 0..n {
            for t in 0..n {
                if s == t {
                    continue;
                }
                let (ast, ats) = (self.entries[s][t], self.entries[t][s]);
                if ast > 0 {
                    return Err(CartanError::PositiveOffDiagonal(self.name(s), self.name(t)));
                }
                if (ast == 0) != (ats == 0) {
                    return Err(CartanError::AsymmetricZero(self.name(s), self.name(t)));
                }
                if ast * ats > 3 {
                    return Err(CartanError::NotFiniteType(
                        FiniteTypeViolation::BondProduct {
                            s: self.name(s),
                            t: self.name(t),
                            product: ast * ats,
                        },
                    ));
                }
            }
        }
        Ok(())
    }

    /// Symmetrizer `d` with `d[s]·a[s][t] = d[t]·a[t][s]`, found by breadth-first
    /// propagation along nonzero bonds and scaled to positive integers.
    fn symmetrizer(&self) -> Result<Vec<i64>, CartanError> {
        let n = self.rank();
        // numerator / denominator pairs, each component seeded with 1/1
        let mut d: Vec<Option<(i64, i64)>> = vec![None; n];
        for root in 0..n {
            if d[root].is_some() {
                continue;
            }
            d[root] = Some((1, 1));
            let mut queue = VecDeque::from([root]);
            while let Some(s) = queue.pop_front() {
                let (num, den) = d[s].unwrap();
                for t in 0..n {
                    let (ast, ats) = (self.entries[s][t], self.entries[t][s]);
                    if t == s || ast == 0 {
                        continue;
                    }
                    // d[t] = d[s]·a[s][t] / a[t][s]
                    let cand = reduce(num * ast, den * ats);
                    match d[t] {
                        None => {
                            d[t] = Some(cand);
                            queue.push_back(t);
                        }
                        Some(existing) if existing != cand => {
                            return Err(CartanError::NotFiniteType(
                                FiniteTypeViolation::NotSymmetrizable {
                                    s: self.name(s),
                                    t: self.name(t),
                                },
                            ));
                        }
                        Some(_) => {}
                    }
                }
            }
        }
        let lcm = d.iter().fold(1i64, |acc, x| lcm(acc, x.unwrap().1));
        Ok(d.into_iter()
            .map(|x| {
                let (p, q) = x.unwrap();
                p * (lcm / q)
            })
            .collect())
    }

    fn check_finite_type(&self) -> Result<(), CartanError> {
        let n = self.rank();
        let d = self.symmetrizer()?;
        let sym: Vec<Vec<BigInt>> = (0..n)
            .map(|s| {
                (0..n)
                    .map(|t| BigInt::from(d[s] * self.entries[s][t]))
                    .collect()
            })
            .collect();
        for (k, minor) in leading_minors(&sym).into_iter().enumerate() {
            if minor <= BigInt::zero() {
                return Err(CartanError::NotFiniteType(
                    FiniteTypeViolation::IndefiniteMinor { order: k + 1 },
                ));
            }
        }
        Ok(())
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[NodeLabel] {
        &self.labels
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    /// `a[s][t]` by node index.
    pub fn entry(&self, s: usize, t: usize) -> i64 {
        self.entries[s][t]
    }

    pub fn display(&self, s: usize) -> &str {
        &self.labels[s].display
    }

    pub fn index_of(&self, display: &str) -> Result<usize, CartanError> {
        self.labels
            .iter()
            .position(|l| l.display == display)
            .ok_or_else(|| CartanError::UnknownLabel(display.to_owned()))
    }

    /// Principal submatrix on `subset` (node indices), kept in the original
    /// order and keeping the original display names.
    pub fn submatrix(&self, subset: &BTreeSet<usize>) -> Result<CartanMatrix, CartanError> {
        if let Some(&bad) = subset.iter().find(|&&s| s >= self.rank()) {
            return Err(CartanError::UnknownLabel(bad.to_string()));
        }
        let idx: Vec<usize> = subset.iter().copied().collect();
        let entries = idx
            .iter()
            .map(|&s| idx.iter().map(|&t| self.entries[s][t]).collect())
            .collect();
        let labels: Vec<&str> = idx.iter().map(|&s| self.display(s)).collect();
        CartanMatrix::new(entries, &labels)
    }

    /// Order of `s·t` in the Weyl group.
    pub fn bond_order(&self, s: usize, t: usize) -> Result<u32, CartanError> {
        for x in [s, t] {
            if x >= self.rank() {
                return Err(CartanError::UnknownLabel(x.to_string()));
            }
        }
        if s == t {
            return Ok(1);
        }
        Ok(match self.entries[s][t] * self.entries[t][s] {
            0 => 2,
            1 => 3,
            2 => 4,
            3 => 6,
            _ => unreachable!("validated finite type"),
        })
    }

    /// Block-diagonal sum; labels are renumbered `"1"..="n+m"`.
    pub fn product(&self, other: &CartanMatrix) -> CartanMatrix {
        let (n, m) = (self.rank(), other.rank());
        let mut entries = vec![vec![0; n + m]; n + m];
        for s in 0..n {
            entries[s][..n].copy_from_slice(&self.entries[s]);
        }
        for s in 0..m {
            entries[n + s][n..].copy_from_slice(&other.entries[s]);
        }
        CartanMatrix::with_numbered_labels(entries).expect("product of finite types")
    }

    /// `A_n`, a path of simply-laced bonds.
    pub fn type_a(n: usize) -> CartanMatrix {
        let mut e = path(n);
        if n == 0 {
            e.clear();
        }
        CartanMatrix::with_numbered_labels(e).expect("A_n")
    }

    /// `B_n` with the short root last: `a[n][n-1] = -2`.
    pub fn type_b(n: usize) -> CartanMatrix {
        assert!(n >= 2, "B_n needs n >= 2");
        let mut e = path(n);
        e[n - 1][n - 2] = -2;
        CartanMatrix::with_numbered_labels(e).expect("B_n")
    }

    /// `C_n`, the transpose of [`type_b`](Self::type_b).
    pub fn type_c(n: usize) -> CartanMatrix {
        assert!(n >= 2, "C_n needs n >= 2");
        let mut e = path(n);
        e[n - 2][n - 1] = -2;
        CartanMatrix::with_numbered_labels(e).expect("C_n")
    }

    /// `D_n`, the last two nodes both attached to node `n-2`.
    pub fn type_d(n: usize) -> CartanMatrix {
        assert!(n >= 4, "D_n needs n >= 4");
        let mut e = path(n);
        e[n - 1][n - 2] = 0;
        e[n - 2][n - 1] = 0;
        e[n - 1][n - 3] = -1;
        e[n - 3][n - 1] = -1;
        CartanMatrix::with_numbered_labels(e).expect("D_n")
    }

    /// `F_4` with `a[3][2] = -2`.
    pub fn type_f4() -> CartanMatrix {
        let mut e = path(4);
        e[2][1] = -2;
        CartanMatrix::with_numbered_labels(e).expect("F_4")
    }

    /// `G_2`, equal to [`m`](Self::m)`(3)`.
    pub fn type_g2() -> CartanMatrix {
        Self::m(3)
    }

    /// `M_n = [[2, -1], [-n, 2]]` for `n = 1, 2, 3`: `A_2`, `B_2`, `G_2`.
    pub fn m(n: i64) -> CartanMatrix {
        assert!((1..=3).contains(&n), "M_n is defined for n = 1, 2, 3");
        CartanMatrix::with_numbered_labels(vec![vec![2, -1], vec![-n, 2]]).expect("M_n")
    }

    /// `2·I_2`, type `A_1 × A_1`.
    pub fn two_i2() -> CartanMatrix {
        CartanMatrix::with_numbered_labels(vec![vec![2, 0], vec![0, 2]]).expect("2I_2")
    }
}

fn path(n: usize) -> Vec<Vec<i64>> {
    let mut e = vec![vec![0; n]; n];
    for s in 0..n {
        e[s][s] = 2;
        if s + 1 < n {
            e[s][s + 1] = -1;
            e[s + 1][s] = -1;
        }
    }
    e
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: i64, b: i64) -> i64 {
    a / gcd(a, b) * b
}

fn reduce(num: i64, den: i64) -> (i64, i64) {
    let g = gcd(num, den);
    let (num, den) = (num / g, den / g);
    if den < 0 {
        (-num, -den)
    } else {
        (num, den)
    }
}

/// Leading principal minors by fraction-free Bareiss elimination.
fn leading_minors(m: &[Vec<BigInt>]) -> Vec<BigInt> {
    let n = m.len();
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let mut prev = BigInt::from(1);
    let mut minors = Vec::with_capacity(n);
    for k in 0..n {
        let pivot = a[k][k].clone();
        minors.push(pivot.clone());
        if pivot.is_zero() {
            // every later minor is checked against the zero we just pushed
            break;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[i][j] * &pivot - &a[i][k] * &a[k][j]) / &prev;
            }
        }
        prev = pivot;
    }
    minors
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[usize]) -> BTreeSet<usize> {
        xs.iter().copied().collect()
    }

    #[test]
    fn validates_m2_and_two_i2() {
        assert!(CartanMatrix::with_numbered_labels(vec![vec![2, -1], vec![-2, 2]]).is_ok());
        assert!(CartanMatrix::with_numbered_labels(vec![vec![2, 0], vec![0, 2]]).is_ok());
    }

    #[test]
    fn rejects_affine_a1() {
        let err = CartanMatrix::with_numbered_labels(vec![vec![2, -2], vec![-2, 2]]).unwrap_err();
        assert!(matches!(
            err,
            CartanError::NotFiniteType(FiniteTypeViolation::BondProduct { product: 4, .. })
        ));
    }

    #[test]
    fn rejects_affine_a2_cycle() {
        // triangle of simple bonds: symmetrizable, but singular
        let raw = vec![vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]];
        let err = CartanMatrix::with_numbered_labels(raw).unwrap_err();
        assert_eq!(
            err,
            CartanError::NotFiniteType(FiniteTypeViolation::IndefiniteMinor { order: 3 })
        );
    }

    #[test]
    fn rejects_non_symmetrizable_cycle() {
        let raw = vec![vec![2, -1, -1], vec![-2, 2, -1], vec![-1, -1, 2]];
        let err = CartanMatrix::with_numbered_labels(raw).unwrap_err();
        assert!(matches!(
            err,
            CartanError::NotFiniteType(FiniteTypeViolation::NotSymmetrizable { .. })
        ));
    }

    #[test]
    fn axiom_errors_name_the_pair() {
        let e = CartanMatrix::with_numbered_labels(vec![vec![2, -1], vec![-1, 3]]).unwrap_err();
        assert_eq!(e, CartanError::DiagonalNotTwo("2".into()));
        let e = CartanMatrix::with_numbered_labels(vec![vec![2, 1], vec![1, 2]]).unwrap_err();
        assert_eq!(e, CartanError::PositiveOffDiagonal("1".into(), "2".into()));
        let e = CartanMatrix::with_numbered_labels(vec![vec![2, 0], vec![-1, 2]]).unwrap_err();
        assert_eq!(e, CartanError::AsymmetricZero("1".into(), "2".into()));
        let e = CartanMatrix::new(vec![vec![2]], &["a", "b"]).unwrap_err();
        assert_eq!(e, CartanError::Shape { labels: 2 });
        let e = CartanMatrix::new(vec![vec![2, 0], vec![0, 2]], &["a", "a"]).unwrap_err();
        assert_eq!(e, CartanError::DuplicateLabel("a".into()));
    }

    #[test]
    fn g2_and_f4_are_finite() {
        CartanMatrix::type_g2();
        CartanMatrix::type_f4();
        CartanMatrix::type_d(4);
        CartanMatrix::type_c(3);
    }

    #[test]
    fn submatrix_of_example_matrices() {
        let a4 = CartanMatrix::type_a(4);
        let sub = a4.submatrix(&set(&[0, 1])).unwrap();
        assert_eq!(sub.entries(), &[vec![2, -1], vec![-1, 2]]);
        assert_eq!(a4.submatrix(&set(&[0, 1, 2, 3])).unwrap(), a4);

        let b4 = CartanMatrix::type_b(4);
        let sub = b4.submatrix(&set(&[2, 3])).unwrap();
        assert_eq!(sub.entries(), &[vec![2, -1], vec![-2, 2]]);
        assert_eq!(sub.display(0), "3");
        assert_eq!(sub.display(1), "4");
        assert!(matches!(
            a4.submatrix(&set(&[7])),
            Err(CartanError::UnknownLabel(_))
        ));
    }

    #[test]
    fn bond_orders() {
        assert_eq!(CartanMatrix::m(1).bond_order(0, 1), Ok(3));
        assert_eq!(CartanMatrix::m(2).bond_order(0, 1), Ok(4));
        assert_eq!(CartanMatrix::m(3).bond_order(0, 1), Ok(6));
        assert_eq!(CartanMatrix::two_i2().bond_order(0, 1), Ok(2));
        assert_eq!(CartanMatrix::m(3).bond_order(1, 1), Ok(1));
        assert!(CartanMatrix::m(3).bond_order(0, 5).is_err());
    }

    #[test]
    fn every_principal_submatrix_of_builtins_validates() {
        let builtins = [
            CartanMatrix::type_a(4),
            CartanMatrix::type_b(4),
            CartanMatrix::type_c(4),
            CartanMatrix::type_d(4),
            CartanMatrix::type_f4(),
            CartanMatrix::type_g2().product(&CartanMatrix::type_b(2)),
        ];
        for m in &builtins {
            for mask in 0u32..(1 << m.rank()) {
                let sub: BTreeSet<usize> = (0..m.rank()).filter(|i| mask >> i & 1 == 1).collect();
                m.submatrix(&sub).unwrap();
            }
            for s in 0..m.rank() {
                for t in 0..m.rank() {
                    assert_eq!(m.bond_order(s, t), m.bond_order(t, s));
                }
            }
        }
    }

    #[test]
    fn example_matrices_match_builtins() {
        let b4 = vec![
            vec![2, -1, 0, 0],
            vec![-1, 2, -1, 0],
            vec![0, -1, 2, -1],
            vec![0, 0, -2, 2],
        ];
        let f4 = vec![
            vec![2, -1, 0, 0],
            vec![-1, 2, -1, 0],
            vec![0, -2, 2, -1],
            vec![0, 0, -1, 2],
        ];
        assert_eq!(CartanMatrix::type_b(4).entries(), &b4[..]);
        assert_eq!(CartanMatrix::type_f4().entries(), &f4[..]);
    }
}
