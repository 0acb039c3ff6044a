//! Formal Hodge diamonds, truncated diamonds, Betti vectors and primitive
//! numbers, together with the Künneth product and the blow-up formula.
//!
//! Every table is stored densely over a generic exact integer type; nothing
//! here ever rounds.

use std::fmt;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::json::{array_field, int_from_value, int_value, usize_field};
use crate::scalar::HodgeInt;

/// The predicate families a diamond or Betti vector can violate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Predicate {
    Nonnegative,
    ConjugateSymmetry,
    SerreSymmetry,
    Lefschetz,
    Connectivity,
    OddParity,
}

impl Predicate {
    pub fn name(self) -> &'static str {
        match self {
            Predicate::Nonnegative => "nonnegative",
            Predicate::ConjugateSymmetry => "conjugate-symmetry",
            Predicate::SerreSymmetry => "serre-symmetry",
            Predicate::Lefschetz => "lefschetz",
            Predicate::Connectivity => "connectivity",
            Predicate::OddParity => "odd-parity",
        }
    }
}

/// Where a violation happened: a Hodge cell `(p, q)` or a Betti degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Site {
    Cell(usize, usize),
    Degree(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub predicate: Predicate,
    pub site: Site,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.site {
            Site::Cell(p, q) => write!(f, "{} at ({p},{q}): {}", self.predicate.name(), self.detail),
            Site::Degree(k) => write!(f, "{} at degree {k}: {}", self.predicate.name(), self.detail),
        }
    }
}

/// Result of [`FormalHodgeDiamond::validate`] and friends. Empty means valid.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidityReport {
    pub violations: Vec<Violation>,
}

impl ValidityReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violates(&self, predicate: Predicate) -> bool {
        self.violations.iter().any(|v| v.predicate == predicate)
    }

    pub fn to_json(&self) -> Value {
        let list: Vec<Value> = self
            .violations
            .iter()
            .map(|v| {
                let site = match v.site {
                    Site::Cell(p, q) => json!({"p": p, "q": q}),
                    Site::Degree(k) => json!({"k": k}),
                };
                json!({"predicate": v.predicate.name(), "site": site, "detail": v.detail})
            })
            .collect();
        json!({"valid": self.is_valid(), "violations": list})
    }
}

/// Shared predicate checks. `get` returns `None` for cells that are absent
/// (the middle row of a truncated diamond).
fn check_cells<T: HodgeInt>(n: usize, get: impl Fn(usize, usize) -> Option<T>) -> ValidityReport {
    let mut out = Vec::new();
    let zero = T::zero();
    for p in 0..=n {
        for q in 0..=n {
            let Some(h) = get(p, q) else { continue };
            if h < zero {
                out.push(Violation {
                    predicate: Predicate::Nonnegative,
                    site: Site::Cell(p, q),
                    detail: format!("h^{{{p},{q}}} = {h} < 0"),
                });
            }
            if p < q {
                if let Some(c) = get(q, p) {
                    if c != h {
                        out.push(Violation {
                            predicate: Predicate::ConjugateSymmetry,
                            site: Site::Cell(p, q),
                            detail: format!("h^{{{p},{q}}} = {h} but h^{{{q},{p}}} = {c}"),
                        });
                    }
                }
            }
            let (mp, mq) = (n - p, n - q);
            if (p, q) < (mp, mq) {
                if let Some(m) = get(mp, mq) {
                    if m != h {
                        out.push(Violation {
                            predicate: Predicate::SerreSymmetry,
                            site: Site::Cell(p, q),
                            detail: format!("h^{{{p},{q}}} = {h} but h^{{{mp},{mq}}} = {m}"),
                        });
                    }
                }
            }
            if p >= 1 && q >= 1 && p + q <= n {
                if let Some(below) = get(p - 1, q - 1) {
                    if h < below {
                        out.push(Violation {
                            predicate: Predicate::Lefschetz,
                            site: Site::Cell(p, q),
                            detail: format!(
                                "h^{{{p},{q}}} = {h} < h^{{{},{}}} = {below}",
                                p - 1,
                                q - 1
                            ),
                        });
                    }
                }
            }
        }
    }
    for corner in [0, n] {
        if let Some(h) = get(corner, corner) {
            if !h.is_one() {
                out.push(Violation {
                    predicate: Predicate::Connectivity,
                    site: Site::Cell(corner, corner),
                    detail: format!("h^{{{corner},{corner}}} = {h}, expected 1"),
                });
            }
        }
        if n == 0 {
            break;
        }
    }
    ValidityReport { violations: out }
}

/// Reads an `(n+1) x (n+1)` JSON grid; `None` marks a `null` cell.
fn read_grid<T: HodgeInt>(v: &Value) -> Result<(usize, Vec<Vec<Option<T>>>)> {
    let n = usize_field(v, "n")?;
    let rows = array_field(v, "h")?;
    if rows.len() != n + 1 {
        return Err(Error::Malformed(format!("expected {} rows for n = {n}, found {}", n + 1, rows.len())));
    }
    let mut grid = Vec::with_capacity(n + 1);
    for (p, row) in rows.iter().enumerate() {
        let row = row
            .as_array()
            .ok_or_else(|| Error::Malformed(format!("row {p} is not an array")))?;
        if row.len() != n + 1 {
            return Err(Error::Malformed(format!("row {p} has {} entries, expected {}", row.len(), n + 1)));
        }
        let cells = row
            .iter()
            .map(|c| if c.is_null() { Ok(None) } else { int_from_value(c).map(Some) })
            .collect::<Result<Vec<_>>>()?;
        grid.push(cells);
    }
    Ok((n, grid))
}

fn write_grid<T: HodgeInt>(n: usize, get: impl Fn(usize, usize) -> Option<T>) -> Value {
    let rows: Vec<Value> = (0..=n)
        .map(|p| {
            Value::Array(
                (0..=n)
                    .map(|q| get(p, q).map_or(Value::Null, |h| int_value(&h)))
                    .collect(),
            )
        })
        .collect();
    json!({"n": n, "h": rows})
}

/// An `(n+1) x (n+1)` table `h[p][q]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FormalHodgeDiamond<T> {
    n: usize,
    h: Vec<Vec<T>>,
}

impl<T: HodgeInt> FormalHodgeDiamond<T> {
    /// Checks the shape only; use [`validate`](Self::validate) for the predicates.
    pub fn new(n: usize, h: Vec<Vec<T>>) -> Result<Self> {
        if h.len() != n + 1 || h.iter().any(|row| row.len() != n + 1) {
            return Err(Error::Malformed(format!("table is not {0}x{0}", n + 1)));
        }
        Ok(Self { n, h })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let h = (0..=n).map(|p| (0..=n).map(|q| f(p, q)).collect()).collect();
        Self { n, h }
    }

    pub fn point() -> Self {
        Self::projective(0)
    }

    pub fn projective(n: usize) -> Self {
        Self::from_fn(n, |p, q| if p == q { T::one() } else { T::zero() })
    }

    pub fn curve(g: T) -> Self {
        Self {
            n: 1,
            h: vec![vec![T::one(), g.clone()], vec![g, T::one()]],
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, p: usize, q: usize) -> &T {
        &self.h[p][q]
    }

    /// Entry with zero outside `0..=n`.
    pub fn at(&self, p: isize, q: isize) -> T {
        let n = self.n as isize;
        if p < 0 || q < 0 || p > n || q > n {
            T::zero()
        } else {
            self.h[p as usize][q as usize].clone()
        }
    }

    pub fn rows(&self) -> &[Vec<T>] {
        &self.h
    }

    pub fn validate(&self) -> ValidityReport {
        check_cells(self.n, |p, q| Some(self.h[p][q].clone()))
    }

    pub fn primitive_numbers(&self) -> PrimitiveTable<T> {
        PrimitiveTable::from_cells(self.n, self.n, |p, q| self.at(p as isize, q as isize))
    }

    pub fn betti(&self) -> BettiVector<T> {
        let n = self.n;
        let b = (0..=2 * n)
            .map(|k| {
                (k.saturating_sub(n)..=k.min(n)).fold(T::zero(), |acc, p| acc + self.h[p][k - p].clone())
            })
            .collect();
        BettiVector { n, b }
    }

    /// Topological Euler number `Σ (-1)^k b_k`.
    pub fn euler_number(&self) -> T {
        self.betti().euler_number()
    }

    pub fn kunneth(&self, other: &Self) -> Self {
        let n = self.n + other.n;
        let mut h = vec![vec![T::zero(); n + 1]; n + 1];
        for (p1, row1) in self.h.iter().enumerate() {
            for (q1, a) in row1.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (p2, row2) in other.h.iter().enumerate() {
                    for (q2, b) in row2.iter().enumerate() {
                        h[p1 + p2][q1 + q2] = h[p1 + p2][q1 + q2].clone() + a.clone() * b.clone();
                    }
                }
            }
        }
        Self { n, h }
    }

    /// Blow-up of `self` along a smooth center with diamond `center` and
    /// codimension `r`.
    pub fn blow_up(&self, center: &Self, r: usize) -> Result<Self> {
        if r < 2 {
            return Err(Error::Contract(format!("blow-up codimension must be at least 2, got {r}")));
        }
        if center.n + r != self.n {
            return Err(Error::Contract(format!(
                "center of dimension {} does not have codimension {r} in dimension {}",
                center.n, self.n
            )));
        }
        Ok(Self::from_fn(self.n, |p, q| {
            (0..=r - 2).fold(self.h[p][q].clone(), |acc, i| {
                acc + center.at(p as isize - i as isize - 1, q as isize - i as isize - 1)
            })
        }))
    }

    /// Blow-up in `count` distinct points.
    pub fn blow_up_points(&self, count: u64) -> Result<Self> {
        if count > 0 && self.n < 2 {
            return Err(Error::Contract("points have codimension < 2 on a curve".into()));
        }
        let c = T::from_u64_exact(count);
        Ok(Self::from_fn(self.n, |p, q| {
            let h = self.h[p][q].clone();
            if p == q && p >= 1 && p < self.n {
                h + c.clone()
            } else {
                h
            }
        }))
    }

    pub fn truncate(&self) -> TruncatedDiamond<T> {
        TruncatedDiamond::from_fn(self.n, |p, q| self.h[p][q].clone())
    }

    pub fn to_json(&self) -> Value {
        write_grid(self.n, |p, q| Some(self.h[p][q].clone()))
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let (n, grid) = read_grid::<T>(v)?;
        let h = grid
            .into_iter()
            .enumerate()
            .map(|(p, row)| {
                row.into_iter()
                    .enumerate()
                    .map(|(q, c)| c.ok_or_else(|| Error::Malformed(format!("null entry at ({p},{q})"))))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { n, h })
    }
}

/// A diamond whose middle row `p + q = n` is absent.
///
/// Row `p` stores the `n` entries with `q != n - p`, in increasing `q`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruncatedDiamond<T> {
    n: usize,
    rows: Vec<Vec<T>>,
}

impl<T: HodgeInt> TruncatedDiamond<T> {
    /// `f` is only called off the middle row.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let rows = (0..=n)
            .map(|p| (0..=n).filter(|&q| p + q != n).map(|q| f(p, q)).collect())
            .collect();
        Self { n, rows }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// `None` on the middle row.
    pub fn get(&self, p: usize, q: usize) -> Option<&T> {
        let n = self.n;
        if p > n || q > n || p + q == n {
            return None;
        }
        let idx = if q < n - p { q } else { q - 1 };
        Some(&self.rows[p][idx])
    }

    /// Entry with zero outside `0..=n`; `None` on the middle row.
    pub fn at(&self, p: isize, q: isize) -> Option<T> {
        let n = self.n as isize;
        if p + q == n {
            return None;
        }
        if p < 0 || q < 0 || p > n || q > n {
            return Some(T::zero());
        }
        self.get(p as usize, q as usize).cloned()
    }

    pub fn validate(&self) -> ValidityReport {
        check_cells(self.n, |p, q| self.get(p, q).cloned())
    }

    /// Primitive numbers for `p + q < n`.
    pub fn primitive_numbers(&self) -> PrimitiveTable<T> {
        let bound = self.n.checked_sub(1);
        match bound {
            None => PrimitiveTable { n: 0, bound: None, l: Vec::new() },
            Some(b) => PrimitiveTable::from_cells(self.n, b, |p, q| {
                self.at(p as isize, q as isize).expect("below the middle row")
            }),
        }
    }

    /// Betti numbers `b_k` for `k != n`; entry `n` is `None`.
    pub fn betti(&self) -> Vec<Option<T>> {
        let n = self.n;
        (0..=2 * n)
            .map(|k| {
                if k == n {
                    None
                } else {
                    Some((k.saturating_sub(n)..=k.min(n)).fold(T::zero(), |acc, p| {
                        acc + self.get(p, k - p).cloned().expect("off the middle row")
                    }))
                }
            })
            .collect()
    }

    pub fn to_json(&self) -> Value {
        write_grid(self.n, |p, q| self.get(p, q).cloned())
    }

    /// Middle-row entries may be `null` or numbers; numbers there are ignored.
    pub fn from_json(v: &Value) -> Result<Self> {
        let (n, grid) = read_grid::<T>(v)?;
        for (p, row) in grid.iter().enumerate() {
            for (q, c) in row.iter().enumerate() {
                if p + q != n && c.is_none() {
                    return Err(Error::Malformed(format!("null entry at ({p},{q}) off the middle row")));
                }
            }
        }
        Ok(Self::from_fn(n, |p, q| grid[p][q].clone().expect("checked above")))
    }
}

/// Primitive numbers `l^{p,q} = h^{p,q} - h^{p-1,q-1}` for `p + q <= bound`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PrimitiveTable<T> {
    n: usize,
    bound: Option<usize>,
    l: Vec<Vec<T>>,
}

impl<T: HodgeInt> PrimitiveTable<T> {
    fn from_cells(n: usize, bound: usize, h: impl Fn(usize, usize) -> T) -> Self {
        let l = (0..=bound)
            .map(|p| {
                (0..=bound - p)
                    .map(|q| {
                        let below = if p > 0 && q > 0 { h(p - 1, q - 1) } else { T::zero() };
                        h(p, q) - below
                    })
                    .collect()
            })
            .collect();
        Self { n, bound: Some(bound), l }
    }

    /// A table for `p + q < n` built from a function of `(p, q)`.
    pub fn below_middle(n: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        match n.checked_sub(1) {
            None => Self { n, bound: None, l: Vec::new() },
            Some(b) => Self {
                n,
                bound: Some(b),
                l: (0..=b).map(|p| (0..=b - p).map(|q| f(p, q)).collect()).collect(),
            },
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// Largest `p + q` covered, `None` when the table is empty.
    pub fn bound(&self) -> Option<usize> {
        self.bound
    }

    pub fn get(&self, p: usize, q: usize) -> Option<&T> {
        self.l.get(p).and_then(|row| row.get(q))
    }

    /// Entry with zero for negative indices; `None` above the bound.
    pub fn at(&self, p: isize, q: isize) -> Option<T> {
        if p < 0 || q < 0 {
            return Some(T::zero());
        }
        self.get(p as usize, q as usize).cloned()
    }

    pub fn add_at(&mut self, p: usize, q: usize, v: T) {
        let cell = &mut self.l[p][q];
        *cell = cell.clone() + v;
    }

    /// Cumulative sums below the middle row and Serre symmetry above it.
    ///
    /// Requires a table covering exactly `p + q < n`.
    pub fn integrate(&self) -> Result<TruncatedDiamond<T>> {
        let n = self.n;
        if self.bound != n.checked_sub(1) {
            return Err(Error::Contract("integration needs primitive numbers for all p + q < n".into()));
        }
        let lower = |p: usize, q: usize| -> T {
            (0..=p.min(q)).fold(T::zero(), |acc, s| acc + self.l[p - s][q - s].clone())
        };
        Ok(TruncatedDiamond::from_fn(n, |p, q| {
            if p + q < n {
                lower(p, q)
            } else {
                lower(n - p, n - q)
            }
        }))
    }
}

/// Betti numbers `b_0 ... b_{2n}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BettiVector<T> {
    n: usize,
    b: Vec<T>,
}

impl<T: HodgeInt> BettiVector<T> {
    pub fn new(n: usize, b: Vec<T>) -> Result<Self> {
        if b.len() != 2 * n + 1 {
            return Err(Error::Malformed(format!(
                "a Betti vector in dimension {n} has {} entries, found {}",
                2 * n + 1,
                b.len()
            )));
        }
        Ok(Self { n, b })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, k: usize) -> &T {
        &self.b[k]
    }

    pub fn as_slice(&self) -> &[T] {
        &self.b
    }

    pub fn euler_number(&self) -> T {
        self.b.iter().enumerate().fold(T::zero(), |acc, (k, b)| {
            if k % 2 == 0 {
                acc + b.clone()
            } else {
                acc - b.clone()
            }
        })
    }

    pub fn validate(&self) -> ValidityReport {
        let n = self.n;
        let two = T::one() + T::one();
        let mut out = Vec::new();
        let mut push = |predicate, k, detail: String| {
            out.push(Violation { predicate, site: Site::Degree(k), detail })
        };
        for (k, b) in self.b.iter().enumerate() {
            if *b < T::zero() {
                push(Predicate::Nonnegative, k, format!("b_{k} = {b} < 0"));
            }
            if k < n && self.b[2 * n - k] != *b {
                push(Predicate::SerreSymmetry, k, format!("b_{k} = {b} but b_{} = {}", 2 * n - k, self.b[2 * n - k]));
            }
            if (2..=n).contains(&k) && *b < self.b[k - 2] {
                push(Predicate::Lefschetz, k, format!("b_{k} = {b} < b_{} = {}", k - 2, self.b[k - 2]));
            }
            if k % 2 == 1 && !(b.clone() % two.clone()).is_zero() {
                push(Predicate::OddParity, k, format!("b_{k} = {b} is odd"));
            }
        }
        for k in [0, 2 * n] {
            if !self.b[k].is_one() {
                push(Predicate::Connectivity, k, format!("b_{k} = {}, expected 1", self.b[k]));
            }
            if n == 0 {
                break;
            }
        }
        ValidityReport { violations: out }
    }

    pub fn to_json(&self) -> Value {
        json!({"n": self.n, "b": self.b.iter().map(int_value).collect::<Vec<_>>()})
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let n = usize_field(v, "n")?;
        let b = array_field(v, "b")?
            .iter()
            .map(int_from_value)
            .collect::<Result<Vec<T>>>()?;
        Self::new(n, b)
    }
}

/// A diamond in which some entries are unknown.
///
/// Evaluated construction plans produce these: a key-construction section
/// leaves its middle row open, and a product with projective space only knows
/// the cells that do not depend on it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartialDiamond<T> {
    n: usize,
    cells: Vec<Vec<Option<T>>>,
}

impl<T: HodgeInt> PartialDiamond<T> {
    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, p: usize, q: usize) -> Option<&T> {
        self.cells.get(p).and_then(|row| row.get(q)).and_then(Option::as_ref)
    }

    /// Row `p + q = k`, listed as `h(k,0), h(k-1,1), ..., h(0,k)` (when `k <= n`).
    pub fn row(&self, k: usize) -> Vec<Option<T>> {
        let n = self.n;
        (0..=2 * n)
            .filter(|&q| q <= k && k - q <= n && q <= n)
            .map(|q| self.get(k - q, q).cloned())
            .collect()
    }

    pub fn kunneth(&self, other: &Self) -> Self {
        let n = self.n + other.n;
        let cells = (0..=n)
            .map(|p| {
                (0..=n)
                    .map(|q| {
                        let mut acc = Some(T::zero());
                        for p1 in p.saturating_sub(other.n)..=p.min(self.n) {
                            for q1 in q.saturating_sub(other.n)..=q.min(self.n) {
                                let a = self.cells[p1][q1].as_ref();
                                let b = other.cells[p - p1][q - q1].as_ref();
                                let term = match (a, b) {
                                    (Some(x), _) if x.is_zero() => Some(T::zero()),
                                    (_, Some(y)) if y.is_zero() => Some(T::zero()),
                                    (Some(x), Some(y)) => Some(x.clone() * y.clone()),
                                    _ => None,
                                };
                                acc = match (acc, term) {
                                    (Some(s), Some(t)) => Some(s + t),
                                    _ => None,
                                };
                            }
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        Self { n, cells }
    }

    pub fn is_complete(&self) -> bool {
        self.cells.iter().flatten().all(Option::is_some)
    }

    pub fn to_full(&self) -> Option<FormalHodgeDiamond<T>> {
        let h = self
            .cells
            .iter()
            .map(|row| row.iter().cloned().collect::<Option<Vec<T>>>())
            .collect::<Option<Vec<_>>>()?;
        Some(FormalHodgeDiamond { n: self.n, h })
    }

    /// Available when every cell off the middle row is known.
    pub fn to_truncated(&self) -> Option<TruncatedDiamond<T>> {
        let n = self.n;
        for p in 0..=n {
            for q in 0..=n {
                if p + q != n && self.cells[p][q].is_none() {
                    return None;
                }
            }
        }
        Some(TruncatedDiamond::from_fn(n, |p, q| self.cells[p][q].clone().expect("checked")))
    }

    pub fn to_json(&self) -> Value {
        write_grid(self.n, |p, q| self.cells[p][q].clone())
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let (n, cells) = read_grid::<T>(v)?;
        Ok(Self { n, cells })
    }
}

impl<T: HodgeInt> From<&FormalHodgeDiamond<T>> for PartialDiamond<T> {
    fn from(d: &FormalHodgeDiamond<T>) -> Self {
        Self {
            n: d.n,
            cells: d.h.iter().map(|row| row.iter().cloned().map(Some).collect()).collect(),
        }
    }
}

impl<T: HodgeInt> From<&TruncatedDiamond<T>> for PartialDiamond<T> {
    fn from(d: &TruncatedDiamond<T>) -> Self {
        let n = d.n;
        Self {
            n,
            cells: (0..=n).map(|p| (0..=n).map(|q| d.get(p, q).cloned()).collect()).collect(),
        }
    }
}
