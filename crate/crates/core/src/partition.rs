//! Partition combinatorics: tableau counts, Schur dimensions and
//! Littlewood-Richardson coefficients.
//!
//! Everything here is exact. Counts are arbitrary-precision ([`BigUint`]),
//! since standard-tableau numbers overflow fixed-width integers quickly.

use num::{BigUint, One, Zero};
use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

/// An integer partition: a weakly decreasing sequence of positive parts.
///
/// The empty sequence is the empty partition. No trailing zeros are stored,
/// so two partitions are equal iff their part vectors are equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from its parts.
    ///
    /// Panics if the parts are not weakly decreasing or contain a zero.
    /// Use [`Partition::try_new`] for validated construction from
    /// untrusted input.
    pub fn new(parts: Vec<u32>) -> Self {
        Self::try_new(parts).expect("parts must be positive and weakly decreasing")
    }

    /// Validated construction: rejects zero parts and increasing steps.
    pub fn try_new(parts: Vec<u32>) -> Result<Self, InvalidPartition> {
        if parts.iter().any(|&p| p == 0) {
            return Err(InvalidPartition::ZeroPart);
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(InvalidPartition::NotDecreasing);
        }
        Ok(Partition { parts })
    }

    /// The empty partition.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Convenience constructor from a slice, for literals in code and tests.
    pub fn of(parts: &[u32]) -> Self {
        Self::new(parts.to_vec())
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of rows.
    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    /// The size |λ| = sum of all parts.
    pub fn size(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Row length at `row`, zero beyond the last row.
    pub fn part(&self, row: usize) -> u32 {
        self.parts.get(row).copied().unwrap_or(0)
    }

    /// Young-diagram containment: `other` fits inside `self` row by row.
    pub fn contains(&self, other: &Partition) -> bool {
        other
            .parts
            .iter()
            .enumerate()
            .all(|(i, &p)| self.part(i) >= p)
    }

    /// The conjugate (transposed) partition.
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0) as usize;
        let parts = (0..cols)
            .map(|j| self.parts.iter().take_while(|&&p| p as usize > j).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Hook length of the cell at (row, col), both 0-indexed.
    fn hook(&self, conj: &Partition, row: usize, col: usize) -> u64 {
        let arm = self.part(row) as u64 - col as u64 - 1;
        let leg = conj.part(col) as u64 - row as u64 - 1;
        arm + leg + 1
    }
}

/// Construction error for partitions read from untrusted input.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InvalidPartition {
    #[error("partition parts must be positive")]
    ZeroPart,
    #[error("partition parts must be weakly decreasing")]
    NotDecreasing,
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{:?}", self.parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, ")")
    }
}

/// Partitions are ordered by size first, then reverse-lexicographically
/// within a size class, matching the order of [`partitions_of`]. This is
/// the deterministic key order used everywhere partitions index a map.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl serde::Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> serde::Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(deserializer)?;
        Partition::try_new(parts).map_err(serde::de::Error::custom)
    }
}

/// All partitions of `d`, in reverse-lexicographic order: `(d)` first,
/// `(1,...,1)` last. `partitions_of(0)` yields only the empty partition.
pub fn partitions_of(d: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    descend(d, u32::MAX, &mut current, &mut out);
    out
}

fn descend(remaining: usize, cap: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    let mut part = (remaining as u64).min(cap as u64) as u32;
    while part >= 1 {
        current.push(part);
        descend(remaining - part as usize, part, current, out);
        current.pop();
        part -= 1;
    }
}

fn factorial(n: usize) -> BigUint {
    let mut acc = BigUint::one();
    for k in 2..=n {
        acc *= BigUint::from(k);
    }
    acc
}

/// Number of standard Young tableaux of shape `shape`, by the hook length
/// formula: |λ|! divided by the product of all hook lengths.
pub fn syt_count(shape: &Partition) -> BigUint {
    let conj = shape.conjugate();
    let mut hooks = BigUint::one();
    for (row, &len) in shape.parts().iter().enumerate() {
        for col in 0..len as usize {
            hooks *= BigUint::from(shape.hook(&conj, row, col));
        }
    }
    factorial(shape.size()) / hooks
}

/// Dimension of the Schur module indexed by `shape` over an `n`-dimensional
/// space, by the hook content formula: the product of (n + col - row) over
/// all cells divided by the product of hook lengths. Equivalently, the number
/// of semistandard tableaux of shape `shape` with entries at most `n`.
/// Zero when the shape has more than `n` rows.
pub fn schur_dim(shape: &Partition, n: usize) -> BigUint {
    if shape.rows() > n {
        return BigUint::zero();
    }
    let conj = shape.conjugate();
    let mut numer = BigUint::one();
    let mut denom = BigUint::one();
    for (row, &len) in shape.parts().iter().enumerate() {
        for col in 0..len as usize {
            // row <= n - 1 here, so n + col - row >= 1
            numer *= BigUint::from(n + col - row);
            denom *= BigUint::from(shape.hook(&conj, row, col));
        }
    }
    numer / denom
}

/// The Littlewood-Richardson coefficient: the multiplicity of the Schur
/// module of shape `outer` inside the product of those of `left` and
/// `right`. Counted directly as the number of skew semistandard tableaux of
/// shape `outer/left` with content `right` whose reverse reading word is a
/// lattice word. Results are memoized; zero on any size or containment
/// mismatch.
pub fn lr_coefficient(left: &Partition, right: &Partition, outer: &Partition) -> BigUint {
    if left.size() + right.size() != outer.size() || !outer.contains(left) {
        return BigUint::zero();
    }
    static CACHE: OnceLock<Mutex<HashMap<(Partition, Partition, Partition), BigUint>>> =
        OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let key = (left.clone(), right.clone(), outer.clone());
    if let Some(hit) = cache.lock().unwrap().get(&key) {
        return hit.clone();
    }
    let count = count_lr_tableaux(left, right, outer);
    cache.lock().unwrap().insert(key, count.clone());
    count
}

/// Backtracking count of Littlewood-Richardson tableaux.
///
/// Cells of the skew shape are filled in reverse reading order (top row to
/// bottom, right to left within a row) so the lattice condition can be
/// checked one placement at a time.
fn count_lr_tableaux(inner: &Partition, content: &Partition, outer: &Partition) -> BigUint {
    // Cells in reverse reading order.
    let mut cells = Vec::new();
    for row in 0..outer.rows() {
        let lo = inner.part(row) as usize;
        let hi = outer.part(row) as usize;
        for col in (lo..hi).rev() {
            cells.push((row, col));
        }
    }
    if cells.is_empty() {
        // Empty skew shape holds exactly the empty filling of empty content.
        return if content.is_empty() {
            BigUint::one()
        } else {
            BigUint::zero()
        };
    }
    let values = content.rows();
    let mut grid = vec![vec![0u32; outer.part(0) as usize]; outer.rows()];
    let mut used = vec![0u32; values + 1];
    let mut count = BigUint::zero();
    fill(
        &cells, 0, inner, content, outer, &mut grid, &mut used, &mut count,
    );
    count
}

#[allow(clippy::too_many_arguments)]
fn fill(
    cells: &[(usize, usize)],
    idx: usize,
    inner: &Partition,
    content: &Partition,
    outer: &Partition,
    grid: &mut Vec<Vec<u32>>,
    used: &mut Vec<u32>,
    count: &mut BigUint,
) {
    if idx == cells.len() {
        *count += BigUint::one();
        return;
    }
    let (row, col) = cells[idx];
    for value in 1..=content.rows() as u32 {
        // Content bound.
        if used[value as usize] >= content.part(value as usize - 1) {
            continue;
        }
        // Lattice word: after placing, #value <= #(value-1) over the prefix.
        if value > 1 && used[value as usize] >= used[value as usize - 1] {
            continue;
        }
        // Rows weakly increase left to right; the right neighbor is filled.
        if col + 1 < outer.part(row) as usize && grid[row][col + 1] < value {
            continue;
        }
        // Columns strictly increase top to bottom, among skew cells only.
        if row > 0 && col >= inner.part(row - 1) as usize && col < outer.part(row - 1) as usize {
            if grid[row - 1][col] >= value {
                continue;
            }
        }
        grid[row][col] = value;
        used[value as usize] += 1;
        fill(cells, idx + 1, inner, content, outer, grid, used, count);
        used[value as usize] -= 1;
        grid[row][col] = 0;
    }
}

/// Dimension of the skew Schur module of shape `outer/inner` over a
/// `u`-dimensional space: the number of skew semistandard tableaux with
/// entries at most `u`. Computed as a Littlewood-Richardson expansion,
/// summing `c^{outer}_{inner,nu} * schur_dim(nu, u)` over all `nu` of the
/// complementary size. Zero when `inner` does not fit inside `outer`.
pub fn skew_schur_dim(outer: &Partition, inner: &Partition, u: usize) -> BigUint {
    if !outer.contains(inner) {
        return BigUint::zero();
    }
    let rest = outer.size() - inner.size();
    let mut total = BigUint::zero();
    for nu in partitions_of(rest) {
        let coeff = lr_coefficient(inner, &nu, outer);
        if !coeff.is_zero() {
            total += coeff * schur_dim(&nu, u);
        }
    }
    total
}
