//! ±1 matrices, their α-profile, and the Sylvester, Paley-type and deletion constructions.
//!
//! Row and column arguments are 1-based throughout this module.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{invalid, Error, Result};
use crate::gf::FieldSpec;

/// Largest Sylvester exponent accepted (order 8192).
pub const MAX_SYLVESTER_EXPONENT: u32 = 13;

/// A square matrix with entries in {+1, -1}, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignMatrix {
    order: usize,
    entries: Vec<i8>,
    symmetric: bool,
}

/// Largest off-diagonal Gram entry in absolute value, plus the common diagonal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct AlphaProfile {
    pub alpha: usize,
    pub gram_diag: usize,
}

/// Whether `is_alpha_hadamard` tests `alpha` as a bound or as the exact maximum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlphaMode {
    Upper,
    Exact,
}

/// Column counts for the four sign patterns of a pair of rows `(i, j)`:
/// `i1` both +1, `i2` both -1, `i3` row i +1 and row j -1, `i4` the reverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairPartition {
    pub i1: usize,
    pub i2: usize,
    pub i3: usize,
    pub i4: usize,
}

impl PairPartition {
    pub fn total(&self) -> usize {
        self.i1 + self.i2 + self.i3 + self.i4
    }

    /// The row dot product these counts encode.
    pub fn dot(&self) -> i64 {
        (self.i1 + self.i2) as i64 - (self.i3 + self.i4) as i64
    }
}

impl SignMatrix {
    /// Builds a matrix from row-major entries, each of which must be +1 or -1.
    pub fn new(order: usize, entries: Vec<i8>) -> Result<Self> {
        if order == 0 {
            return Err(invalid!("matrix order must be at least 1"));
        }
        if entries.len() != order * order {
            return Err(invalid!("expected {} entries, got {}", order * order, entries.len()));
        }
        if let Some(pos) = entries.iter().position(|&e| e != 1 && e != -1) {
            return Err(invalid!(
                "entry ({}, {}) is {}, not ±1",
                pos / order + 1,
                pos % order + 1,
                entries[pos]
            ));
        }
        let symmetric = (0..order).all(|i| (i + 1..order).all(|j| entries[i * order + j] == entries[j * order + i]));
        Ok(Self { order, entries, symmetric })
    }

    /// Builds a matrix from a 0-based entry function.
    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> i8) -> Result<Self> {
        let mut entries = Vec::with_capacity(order * order);
        for i in 0..order {
            for j in 0..order {
                entries.push(f(i, j));
            }
        }
        Self::new(order, entries)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }

    pub fn entries(&self) -> &[i8] {
        &self.entries
    }

    /// Entry at 1-based `(row, col)`.
    pub fn entry(&self, row: usize, col: usize) -> i8 {
        assert!(row >= 1 && row <= self.order && col >= 1 && col <= self.order);
        self.at(row - 1, col - 1)
    }

    /// Rows as slices, first row first.
    pub fn rows(&self) -> impl Iterator<Item = &[i8]> + '_ {
        self.entries.chunks(self.order)
    }

    pub(crate) fn at(&self, r: usize, c: usize) -> i8 {
        self.entries[r * self.order + c]
    }

    fn row0(&self, r: usize) -> &[i8] {
        &self.entries[r * self.order..(r + 1) * self.order]
    }

    pub(crate) fn dot(&self, a: usize, b: usize) -> i64 {
        self.row0(a)
            .iter()
            .zip(self.row0(b))
            .map(|(&x, &y)| i64::from(x * y))
            .sum()
    }

    /// `H Hᵗ`, row-major, in exact integers.
    pub fn gram(&self) -> Vec<i64> {
        let n = self.order;
        let mut g = vec![0i64; n * n];
        for i in 0..n {
            for j in i..n {
                let d = self.dot(i, j);
                g[i * n + j] = d;
                g[j * n + i] = d;
            }
        }
        g
    }

    pub fn negated(&self) -> Self {
        Self {
            order: self.order,
            entries: self.entries.iter().map(|e| -e).collect(),
            symmetric: self.symmetric,
        }
    }

    /// Keeps the rows and columns whose 0-based indices are not flagged.
    fn minor(&self, drop_rows: &[bool], drop_cols: &[bool]) -> Result<Self> {
        let mut entries = Vec::new();
        let mut kept = 0;
        for r in (0..self.order).filter(|&r| !drop_rows[r]) {
            kept += 1;
            entries.extend((0..self.order).filter(|&c| !drop_cols[c]).map(|c| self.at(r, c)));
        }
        Self::new(kept, entries)
    }
}

/// The α-profile: `max_{i != j} |row_i · row_j|` (0 for order 1) and diagonal `ζ`.
pub fn alpha_of(h: &SignMatrix) -> AlphaProfile {
    let n = h.order;
    let mut alpha = 0;
    for i in 0..n {
        for j in i + 1..n {
            alpha = alpha.max(h.dot(i, j).unsigned_abs() as usize);
        }
    }
    AlphaProfile { alpha, gram_diag: n }
}

pub fn is_alpha_hadamard(h: &SignMatrix, alpha: usize, mode: AlphaMode) -> Result<bool> {
    if alpha > h.order {
        return Err(invalid!("alpha {alpha} exceeds order {}", h.order));
    }
    let measured = alpha_of(h).alpha;
    Ok(match mode {
        AlphaMode::Upper => measured <= alpha,
        AlphaMode::Exact => measured == alpha,
    })
}

/// Symmetric Hadamard matrix of order `2^k` from the doubling `[[M, M], [M, -M]]`.
pub fn sylvester(k: u32) -> Result<SignMatrix> {
    if k > MAX_SYLVESTER_EXPONENT {
        return Err(invalid!("sylvester exponent {k} exceeds {MAX_SYLVESTER_EXPONENT}"));
    }
    let n = 1usize << k;
    // Entry (i, j) of the doubled matrix is (-1)^popcount(i & j).
    SignMatrix::from_fn(n, |i, j| if (i & j).count_ones() % 2 == 0 { 1 } else { -1 })
}

fn character_matrix(spec: &FieldSpec) -> Result<(usize, Vec<i8>)> {
    let chi = spec.quad_char_table()?;
    let q = spec.order();
    let n = q as usize;
    let mut qm = vec![0i8; n * n];
    for i in 0..q {
        for j in 0..q {
            qm[i as usize * n + j as usize] = chi[spec.sub_index(i, j) as usize];
        }
    }
    Ok((n, qm))
}

/// `I + Q` with `Q_ij = χ(a_i - a_j)`, for `q ≡ 3 (mod 4)`.
///
/// The result satisfies `H Hᵗ = (q + 1) I - J` and is 1-Hadamard. It is never
/// symmetric, since `Q` is antisymmetric at these orders.
pub fn paley_one_hadamard(spec: &FieldSpec) -> Result<SignMatrix> {
    let q = spec.order();
    if q % 4 != 3 {
        return Err(Error::WrongResidue { q, expected: 3 });
    }
    let (n, qm) = character_matrix(spec)?;
    let h = SignMatrix::from_fn(n, |i, j| if i == j { 1 } else { qm[i * n + j] })?;
    let gram = h.gram();
    let expected = |i: usize, j: usize| if i == j { n as i64 } else { -1 };
    if let Some(pos) = (0..n * n).find(|&pos| gram[pos] != expected(pos / n, pos % n)) {
        return Err(Error::InternalAssertion(alloc::format!(
            "Gram entry ({}, {}) of the order-{q} construction is {}",
            pos / n + 1,
            pos % n + 1,
            gram[pos]
        )));
    }
    Ok(h)
}

/// Result of the order-`2q` Kronecker construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KroneckerConstruction {
    pub matrix: SignMatrix,
    /// Measured α from the exact Gram matrix.
    pub alpha: usize,
    pub symmetric: bool,
    /// Entries where `H Hᵗ` differs from `2(q+1) I + (J + Q) ⊗ [[-2, -4], [4, -2]]`.
    pub displayed_gram_mismatches: usize,
}

/// `Q ⊗ [[1, 1], [1, -1]] + I ⊗ [[1, -1], [-1, -1]]`, for `q ≡ 1 (mod 4)`.
///
/// Fails with an internal assertion if the measured α exceeds 4.
pub fn paley_double(spec: &FieldSpec) -> Result<KroneckerConstruction> {
    const OFF: [[i8; 2]; 2] = [[1, 1], [1, -1]];
    const DIAG: [[i8; 2]; 2] = [[1, -1], [-1, -1]];
    const DISPLAYED: [[i64; 2]; 2] = [[-2, -4], [4, -2]];

    let q = spec.order();
    if q % 4 != 1 {
        return Err(Error::WrongResidue { q, expected: 1 });
    }
    let (n, qm) = character_matrix(spec)?;
    let matrix = SignMatrix::from_fn(2 * n, |r, c| {
        let (bi, bj, ii, jj) = (r / 2, c / 2, r % 2, c % 2);
        qm[bi * n + bj] * OFF[ii][jj] + if bi == bj { DIAG[ii][jj] } else { 0 }
    })?;
    let alpha = alpha_of(&matrix).alpha;
    let gram = matrix.gram();
    let size = 2 * n;
    let mut mismatches = 0;
    for r in 0..size {
        for c in 0..size {
            let (bi, bj) = (r / 2, c / 2);
            let jq = 1 + i64::from(qm[bi * n + bj]);
            let mut shown = jq * DISPLAYED[r % 2][c % 2];
            if r == c {
                shown += 2 * (q as i64 + 1);
            }
            if gram[r * size + c] != shown {
                mismatches += 1;
            }
        }
    }
    if alpha > 4 {
        return Err(Error::InternalAssertion(alloc::format!(
            "Kronecker construction at q = {q} has alpha {alpha} > 4"
        )));
    }
    let symmetric = matrix.is_symmetric();
    Ok(KroneckerConstruction { matrix, alpha, symmetric, displayed_gram_mismatches: mismatches })
}

fn index_flags(order: usize, indices: &[usize], what: &str) -> Result<Vec<bool>> {
    let mut flags = vec![false; order];
    for &i in indices {
        if i == 0 || i > order {
            return Err(invalid!("{what} index {i} outside 1..={order}"));
        }
        if core::mem::replace(&mut flags[i - 1], true) {
            return Err(invalid!("{what} index {i} repeated"));
        }
    }
    Ok(flags)
}

/// Deletes the given rows and columns of a Hadamard matrix, leaving an
/// `[α]`-Hadamard matrix of order `ζ - α` where `α = |rows| = |cols|`.
pub fn delete_general(h: &SignMatrix, rows: &[usize], cols: &[usize]) -> Result<SignMatrix> {
    let order = h.order;
    if rows.len() != cols.len() {
        return Err(invalid!("deleting {} rows but {} columns", rows.len(), cols.len()));
    }
    let alpha = rows.len();
    if 2 * alpha > order {
        return Err(Error::DeletionTooLarge { requested: alpha, order });
    }
    if alpha_of(h).alpha != 0 {
        return Err(invalid!("input matrix is not Hadamard"));
    }
    let drop_rows = index_flags(order, rows, "row")?;
    let drop_cols = index_flags(order, cols, "column")?;
    let out = h.minor(&drop_rows, &drop_cols)?;
    let measured = alpha_of(&out).alpha;
    if measured > alpha {
        return Err(Error::InternalAssertion(alloc::format!(
            "deleted minor has alpha {measured} > {alpha}"
        )));
    }
    Ok(out)
}

/// Symmetric normalization: makes the first row all ones by negating row `j`
/// together with column `j`, after negating the whole matrix if `H(1,1) = -1`.
pub fn normalize_symmetric(h: &SignMatrix) -> SignMatrix {
    let base = if h.at(0, 0) == -1 { h.negated() } else { h.clone() };
    let signs: Vec<i8> = (0..base.order).map(|j| base.at(0, j)).collect();
    SignMatrix::from_fn(base.order, |i, j| signs[i] * signs[j] * base.at(i, j))
        .expect("sign changes keep entries in ±1")
}

/// Symmetric α-Hadamard matrix of order `ζ - α` from a symmetric Hadamard matrix.
///
/// After [`normalize_symmetric`], the reference row `r` is the smallest index
/// `≥ 2` having at least `α` entries -1 outside column `r` (row 2 unless `α = ζ/2`
/// and `H(2,2) = -1`). The deleted set is the `α` smallest such columns, and
/// rows 1 and `r` of the result have dot product exactly `α`.
pub fn delete_symmetric(h: &SignMatrix, alpha: usize) -> Result<SignMatrix> {
    let order = h.order;
    if !h.symmetric {
        return Err(invalid!("input matrix is not symmetric"));
    }
    if alpha_of(h).alpha != 0 {
        return Err(invalid!("input matrix is not Hadamard"));
    }
    if 2 * alpha > order {
        return Err(Error::DeletionTooLarge { requested: alpha, order });
    }
    let norm = normalize_symmetric(h);
    if alpha == 0 {
        return Ok(norm);
    }
    let norm_ref = &norm;
    let candidates = |r: usize| (0..order).filter(move |&j| j != r && norm_ref.at(r, j) == -1);
    let reference = (1..order)
        .find(|&r| candidates(r).count() >= alpha)
        .ok_or(Error::DeletionTooLarge { requested: alpha, order })?;
    let mut drop = vec![false; order];
    for j in candidates(reference).take(alpha) {
        drop[j] = true;
    }
    let out = norm.minor(&drop, &drop)?;
    let measured = alpha_of(&out).alpha;
    if measured != alpha || !out.symmetric {
        return Err(Error::InternalAssertion(alloc::format!(
            "symmetric deletion produced alpha {measured}, expected {alpha}"
        )));
    }
    Ok(out)
}

/// Sign-pattern counts of rows `i` and `j` (1-based).
pub fn pair_partition(h: &SignMatrix, i: usize, j: usize) -> Result<PairPartition> {
    if i == j {
        return Err(invalid!("pair_partition needs distinct rows, got {i} twice"));
    }
    if i == 0 || j == 0 || i > h.order || j > h.order {
        return Err(invalid!("rows ({i}, {j}) outside 1..={}", h.order));
    }
    let mut part = PairPartition { i1: 0, i2: 0, i3: 0, i4: 0 };
    for (&a, &b) in h.row0(i - 1).iter().zip(h.row0(j - 1)) {
        match (a, b) {
            (1, 1) => part.i1 += 1,
            (-1, -1) => part.i2 += 1,
            (1, -1) => part.i3 += 1,
            _ => part.i4 += 1,
        }
    }
    Ok(part)
}

fn check_permutation(perm: &[usize], order: usize, what: &str) -> Result<()> {
    if perm.len() != order {
        return Err(invalid!("{what} has length {}, expected {order}", perm.len()));
    }
    index_flags(order, perm, what).map(|_| ())
}

fn check_signs(signs: &[i8], order: usize, what: &str) -> Result<()> {
    if signs.len() != order {
        return Err(invalid!("{what} has length {}, expected {order}", signs.len()));
    }
    if signs.iter().any(|&s| s != 1 && s != -1) {
        return Err(invalid!("{what} must contain only ±1"));
    }
    Ok(())
}

/// Entry `(r, c)` of the result is `row_signs[r] · col_signs[c] · H(row_perm[r], col_perm[c])`,
/// where the permutations list 1-based source indices.
pub fn equiv_transform(
    h: &SignMatrix,
    row_perm: &[usize],
    col_perm: &[usize],
    row_signs: &[i8],
    col_signs: &[i8],
) -> Result<SignMatrix> {
    let n = h.order;
    check_permutation(row_perm, n, "row permutation")?;
    check_permutation(col_perm, n, "column permutation")?;
    check_signs(row_signs, n, "row signs")?;
    check_signs(col_signs, n, "column signs")?;
    SignMatrix::from_fn(n, |r, c| row_signs[r] * col_signs[c] * h.at(row_perm[r] - 1, col_perm[c] - 1))
}


#[cfg(test)]
mod tests {
    use super::fixtures::{h1, h2};
    use super::*;

    #[test]
    fn new_rejects_non_sign_entries() {
        assert!(SignMatrix::new(2, vec![1, 0, 1, 1]).is_err());
        assert!(SignMatrix::new(2, vec![1, 1, 1]).is_err());
        assert!(SignMatrix::new(0, vec![]).is_err());
    }

    #[test]
    fn sylvester_and_deleted_alpha_values() {
        assert_eq!(alpha_of(&h1()), AlphaProfile { alpha: 0, gram_diag: 8 });
        assert_eq!(alpha_of(&h2()).alpha, 2);
        let ones = SignMatrix::new(2, vec![1; 4]).unwrap();
        assert_eq!(alpha_of(&ones).alpha, 2);
        assert_eq!(alpha_of(&SignMatrix::new(1, vec![-1]).unwrap()).alpha, 0);
    }

    #[test]
    fn alpha_mode_checks() {
        assert!(is_alpha_hadamard(&h2(), 2, AlphaMode::Exact).unwrap());
        assert!(is_alpha_hadamard(&h2(), 3, AlphaMode::Upper).unwrap());
        assert!(!is_alpha_hadamard(&h2(), 3, AlphaMode::Exact).unwrap());
        assert!(is_alpha_hadamard(&h1(), 1, AlphaMode::Upper).unwrap());
        assert!(is_alpha_hadamard(&h1(), 9, AlphaMode::Upper).is_err());
    }

    #[test]
    fn sylvester_examples() {
        assert_eq!(sylvester(0).unwrap().entries(), &[1]);
        let s4 = sylvester(2).unwrap();
        assert!(s4.is_symmetric());
        assert_eq!(s4.gram(), {
            let mut g = vec![0; 16];
            (0..4).for_each(|i| g[i * 5] = 4);
            g
        });
        assert_eq!(sylvester(3).unwrap(), h1());
        assert!(sylvester(MAX_SYLVESTER_EXPONENT + 1).is_err());
    }

    #[test]
    fn paley_one_hadamard_order_seven() {
        let h = paley_one_hadamard(&FieldSpec::new(7, 1).unwrap()).unwrap();
        let g = h.gram();
        for i in 0..7 {
            for j in 0..7 {
                assert_eq!(g[i * 7 + j], if i == j { 7 } else { -1 });
            }
        }
        assert!(!h.is_symmetric());
        assert_eq!(alpha_of(&h).alpha, 1);
    }

    #[test]
    fn paley_one_hadamard_order_27() {
        let h = paley_one_hadamard(&FieldSpec::new(3, 3).unwrap()).unwrap();
        assert_eq!(h.order(), 27);
        assert_eq!(alpha_of(&h).alpha, 1);
    }

    #[test]
    fn paley_residue_checks() {
        let f5 = FieldSpec::new(5, 1).unwrap();
        assert_eq!(paley_one_hadamard(&f5), Err(Error::WrongResidue { q: 5, expected: 3 }));
        let f7 = FieldSpec::new(7, 1).unwrap();
        assert_eq!(paley_double(&f7).unwrap_err(), Error::WrongResidue { q: 7, expected: 1 });
    }

    #[test]
    fn paley_double_measured_profile() {
        for q in [5u64, 13, 17] {
            let k = paley_double(&FieldSpec::with_order(q).unwrap()).unwrap();
            assert_eq!(k.matrix.order(), 2 * q as usize);
            // Direct Gram evaluation: H Hᵗ = 2q I - 2 (J - I) ⊗ I₂, so α = 2.
            assert_eq!(k.alpha, 2, "q = {q}");
            assert!(k.symmetric);
            assert!(k.displayed_gram_mismatches > 0);
        }
    }

    #[test]
    fn general_deletion_examples() {
        let s4 = sylvester(2).unwrap();
        assert_eq!(delete_general(&s4, &[], &[]).unwrap(), s4);
        assert_eq!(delete_general(&h1(), &[6, 8], &[6, 8]).unwrap(), h2());
        let m = delete_general(&h1(), &[1, 2], &[3, 4]).unwrap();
        assert_eq!(m.order(), 6);
        assert!(alpha_of(&m).alpha <= 2);
    }

    #[test]
    fn general_deletion_errors() {
        let s4 = sylvester(2).unwrap();
        assert_eq!(
            delete_general(&s4, &[1, 2, 3], &[1, 2, 3]),
            Err(Error::DeletionTooLarge { requested: 3, order: 4 })
        );
        assert!(matches!(delete_general(&h2(), &[1], &[1]), Err(Error::InvalidInput(_))));
        assert!(matches!(delete_general(&s4, &[5], &[1]), Err(Error::InvalidInput(_))));
        assert!(matches!(delete_general(&s4, &[1, 1], &[1, 2]), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn symmetric_deletion_examples() {
        let d = delete_symmetric(&h1(), 2).unwrap();
        assert_eq!(d.order(), 6);
        assert!(d.is_symmetric());
        assert_eq!(alpha_of(&d).alpha, 2);
        assert_eq!(delete_symmetric(&h1(), 0).unwrap(), h1());
        let d13 = delete_symmetric(&sylvester(4).unwrap(), 3).unwrap();
        assert_eq!(d13.order(), 13);
        assert!(d13.is_symmetric());
        assert_eq!(alpha_of(&d13).alpha, 3);
    }

    #[test]
    fn symmetric_deletion_reaches_half_order() {
        let d = delete_symmetric(&sylvester(2).unwrap(), 2).unwrap();
        assert_eq!(d.order(), 2);
        assert_eq!(alpha_of(&d).alpha, 2);
        assert_eq!(
            delete_symmetric(&sylvester(1).unwrap(), 1),
            Err(Error::DeletionTooLarge { requested: 1, order: 2 })
        );
    }

    #[test]
    fn symmetric_deletion_errors() {
        let f7 = FieldSpec::new(7, 1).unwrap();
        let asym = paley_one_hadamard(&f7).unwrap();
        assert!(matches!(delete_symmetric(&asym, 1), Err(Error::InvalidInput(_))));
        assert!(matches!(delete_symmetric(&h2(), 1), Err(Error::InvalidInput(_))));
        assert_eq!(
            delete_symmetric(&h1(), 5),
            Err(Error::DeletionTooLarge { requested: 5, order: 8 })
        );
    }

    #[test]
    fn normalization_handles_negative_corner() {
        let n = normalize_symmetric(&h1().negated());
        assert!(n.rows().next().unwrap().iter().all(|&e| e == 1));
        assert!(n.is_symmetric());
        assert_eq!(alpha_of(&n).alpha, 0);
    }

    #[test]
    fn pair_partition_examples() {
        let p = pair_partition(&h1(), 1, 2).unwrap();
        assert_eq!((p.i1, p.i2, p.i3, p.i4), (4, 0, 4, 0));
        let p = pair_partition(&h2(), 1, 2).unwrap();
        assert_eq!((p.i1, p.i2, p.i3, p.i4), (4, 0, 2, 0));
        assert_eq!(p.dot(), 2);
        let ones = SignMatrix::new(2, vec![1; 4]).unwrap();
        let p = pair_partition(&ones, 1, 2).unwrap();
        assert_eq!((p.i1, p.i2, p.i3, p.i4), (2, 0, 0, 0));
        assert!(pair_partition(&ones, 2, 2).is_err());
        assert!(pair_partition(&ones, 1, 3).is_err());
    }

    #[test]
    fn equiv_transform_examples() {
        let id: Vec<usize> = (1..=8).collect();
        let plus = vec![1i8; 8];
        let minus = vec![-1i8; 8];
        assert_eq!(equiv_transform(&h1(), &id, &id, &plus, &plus).unwrap(), h1());
        let neg = equiv_transform(&h1(), &id, &id, &minus, &minus).unwrap();
        assert_eq!(alpha_of(&neg).alpha, 0);
        let swap = [2, 1, 3, 4, 5, 6];
        let id6: Vec<usize> = (1..=6).collect();
        let t = equiv_transform(&h2(), &swap, &id6, &[1; 6], &[1; 6]).unwrap();
        assert_eq!(alpha_of(&t).alpha, 2);
        assert!(equiv_transform(&h2(), &swap[..5], &id6, &[1; 6], &[1; 6]).is_err());
        assert!(equiv_transform(&h2(), &[1, 1, 3, 4, 5, 6], &id6, &[1; 6], &[1; 6]).is_err());
    }
}
