//! The named number families and closed forms: Ore/polynomial Stirling, Lah
//! and Scherk triangles, their recurrences, rectangle-board counting
//! formulas, the basic word `X^m Y^n`, and the normal ordered binomial
//! `(X+Y)^m`. Everything here is built on the placement engines and checked
//! against the rewriting oracle by the test suites.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::boards::Board;
use crate::coeffring::{CoeffPoly, Ring};
use crate::placements::{
    mixed_number_sequential, sequential_table, DpEngine, PlacementError, PlacementType,
};
use crate::rewriter::NormalForm;
use crate::words::{enumerate_diagrams, Word};

// ---------------------------------------------------------------------------
// integer combinatorics
// ---------------------------------------------------------------------------

/// `C(n, k)` with the set-combinatorial convention: zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// Stirling numbers of the second kind, `table[n][k]`, from
/// `S(n+1,k) = S(n,k-1) + k S(n,k)`.
pub fn stirling2_table(max_n: usize) -> Vec<Vec<BigInt>> {
    let mut table = vec![vec![BigInt::zero(); max_n + 1]; max_n + 1];
    table[0][0] = BigInt::one();
    for n in 1..=max_n {
        for k in 1..=n {
            table[n][k] = &table[n - 1][k - 1] + BigInt::from(k as u64) * &table[n - 1][k];
        }
    }
    table
}

/// Unsigned Stirling numbers of the first kind, from
/// `|s(n+1,k)| = |s(n,k-1)| + n |s(n,k)|`.
pub fn stirling1_unsigned_table(max_n: usize) -> Vec<Vec<BigInt>> {
    let mut table = vec![vec![BigInt::zero(); max_n + 1]; max_n + 1];
    table[0][0] = BigInt::one();
    for n in 1..=max_n {
        for k in 1..=n {
            table[n][k] = &table[n - 1][k - 1] + BigInt::from((n - 1) as u64) * &table[n - 1][k];
        }
    }
    table
}

/// Unsigned Lah numbers, from `L(n+1,k) = L(n,k-1) + (n+k) L(n,k)`.
pub fn lah_table(max_n: usize) -> Vec<Vec<BigInt>> {
    let mut table = vec![vec![BigInt::zero(); max_n + 1]; max_n + 1];
    table[0][0] = BigInt::one();
    for n in 1..=max_n {
        for k in 1..=n {
            table[n][k] =
                &table[n - 1][k - 1] + BigInt::from((n - 1 + k) as u64) * &table[n - 1][k];
        }
    }
    table
}

/// Eulerian numbers `A(r, d)`: permutations of `{1..r}` with exactly `d`
/// descents; `A(0,0) = 1`. Built from
/// `A(r,d) = (d+1) A(r-1,d) + (r-d) A(r-1,d-1)`.
pub fn eulerian_table(max_r: usize) -> Vec<Vec<BigInt>> {
    let mut table = vec![vec![BigInt::zero(); max_r + 1]; max_r + 1];
    table[0][0] = BigInt::one();
    for r in 1..=max_r {
        for d in 0..r {
            let stay = BigInt::from((d + 1) as u64) * &table[r - 1][d];
            let rise = if d > 0 {
                BigInt::from((r - d) as u64) * &table[r - 1][d - 1]
            } else {
                BigInt::zero()
            };
            table[r][d] = stay + rise;
        }
    }
    table
}

// ---------------------------------------------------------------------------
// weak compositions
// ---------------------------------------------------------------------------

/// All weak compositions of `total` into `parts` parts.
pub fn weak_compositions(parts: usize, total: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if parts == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    let mut current = vec![0usize; parts];
    fn rec(current: &mut Vec<usize>, idx: usize, left: usize, out: &mut Vec<Vec<usize>>) {
        if idx + 1 == current.len() {
            current[idx] = left;
            out.push(current.clone());
            return;
        }
        for v in 0..=left {
            current[idx] = v;
            rec(current, idx + 1, left - v, out);
        }
    }
    rec(&mut current, 0, total, &mut out);
    out
}

/// `WC_{parts}(total | creation)`: weak compositions with the additional
/// constraint `sum_j (j-1) k_j = creation`.
pub fn weak_compositions_with_creation(
    parts: usize,
    total: usize,
    creation: i64,
) -> Vec<Vec<usize>> {
    weak_compositions(parts, total)
        .into_iter()
        .filter(|k| {
            k.iter()
                .enumerate()
                .map(|(j, &kj)| (j as i64 - 1) * kj as i64)
                .sum::<i64>()
                == creation
        })
        .collect()
}

/// Weak compositions of `total` bounded componentwise by `limits` (the
/// compositions "suiting" a rook-column choice).
pub fn suiting_compositions(limits: &[usize], total: usize) -> Vec<Vec<usize>> {
    weak_compositions(limits.len(), total)
        .into_iter()
        .filter(|rho| rho.iter().zip(limits).all(|(&r, &l)| r <= l))
        .collect()
}

// ---------------------------------------------------------------------------
// combinatorial normal ordering
// ---------------------------------------------------------------------------

/// The normal ordered form of a word assembled from placement numbers on its
/// board: `sum_k sum_{WC} m_k(B;q) Y^{|n| + sum (j-1)k_j} X^{|m| - |k|}`.
pub fn combinatorial_normal_form(ring: Ring, word: &Word) -> NormalForm {
    let board = Board::from_word(word);
    let blocks = word.block_form();
    let total_x = blocks.total_x();
    let total_y = blocks.total_y();
    // the rightmost X run has height-0 columns, so it never holds rooks
    let max_rooks = total_x - blocks.m1();

    let mut engine = DpEngine::new(ring, &board);
    let mut form = NormalForm::new(ring);
    for rooks in 0..=max_rooks {
        for counts in weak_compositions(ring.nvars(), rooks) {
            let ktype = PlacementType::new(counts);
            let value = engine
                .value(&ktype)
                .expect("word boards are always Ferrers")
                .poly;
            if value.is_zero() {
                continue;
            }
            let y = total_y as i64 + ktype.creation_sum();
            assert!(y >= 0, "negative Y exponent on a feasible placement type");
            form.add_term(y as usize, total_x - rooks, &value);
        }
    }
    form
}

// ---------------------------------------------------------------------------
// number families
// ---------------------------------------------------------------------------

/// The triangular families of normal ordering coefficients of `(Y^r X)^n`.
/// Ore families fix `s = 1`; polynomial families carry their own degree
/// bound.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Family {
    OreStirling,
    OreLah,
    OreScherk { r: usize },
    PolyStirling { s: usize },
    PolyLah { s: usize },
    PolyScherk { r: usize, s: usize },
}

impl Family {
    pub fn ring(&self) -> Ring {
        match *self {
            Family::OreStirling | Family::OreLah | Family::OreScherk { .. } => Ring::new(1),
            Family::PolyStirling { s } | Family::PolyLah { s } | Family::PolyScherk { s, .. } => {
                Ring::new(s)
            }
        }
    }

    /// The board whose placements give row `n` of the family.
    pub fn board(&self, n: usize) -> Board {
        Board::jump(n, self.word_height())
    }

    /// The exponent `r` in the underlying word `(Y^r X)^n`.
    pub fn word_height(&self) -> usize {
        match *self {
            Family::OreStirling | Family::PolyStirling { .. } => 1,
            Family::OreLah | Family::PolyLah { .. } => 2,
            Family::OreScherk { r } | Family::PolyScherk { r, .. } => r,
        }
    }

    /// Upper bound on the `j` index of nonzero entries in row `n`.
    pub fn max_j(&self, n: usize) -> usize {
        self.word_height() * n + self.ring().s().saturating_sub(1) * n
    }

    pub fn label(&self) -> String {
        match *self {
            Family::OreStirling => "ore-stirling".into(),
            Family::OreLah => "ore-lah".into(),
            Family::OreScherk { r } => format!("ore-scherk(r={r})"),
            Family::PolyStirling { s } => format!("poly-stirling(s={s})"),
            Family::PolyLah { s } => format!("poly-lah(s={s})"),
            Family::PolyScherk { r, s } => format!("poly-scherk(r={r},s={s})"),
        }
    }

    /// Entry `(n; j, k)` computed on a shared engine for row `n`. The entry
    /// is `m_{rn-j, j-(r-1)n-k}` for the two-parameter families and a sum of
    /// `m_k` over `WC_{s+1}(n-k | j-rn)` for the polynomial ones.
    fn entry(&self, engine: &mut DpEngine, n: usize, j: i64, k: i64) -> CoeffPoly {
        let ring = self.ring();
        if j < 0 || k < 0 {
            return ring.zero();
        }
        let r = self.word_height() as i64;
        let base = r * n as i64;
        match *self {
            Family::OreStirling | Family::OreLah | Family::OreScherk { .. } => {
                let rooks = base - j;
                let files = j - (r - 1) * n as i64 - k;
                if rooks < 0 || files < 0 {
                    return ring.zero();
                }
                engine
                    .value(&PlacementType::rook_file(rooks as usize, files as usize))
                    .expect("family boards are Ferrers")
                    .poly
            }
            Family::PolyStirling { .. } | Family::PolyLah { .. } | Family::PolyScherk { .. } => {
                let total = n as i64 - k;
                if total < 0 {
                    return ring.zero();
                }
                let creation = j - base;
                let mut acc = ring.zero();
                for counts in
                    weak_compositions_with_creation(ring.nvars(), total as usize, creation)
                {
                    let value = engine
                        .value(&PlacementType::new(counts))
                        .expect("family boards are Ferrers")
                        .poly;
                    acc = &acc + &value;
                }
                acc
            }
        }
    }
}

/// One family value without a prebuilt table; out-of-range indices are zero.
pub fn family_value(family: Family, n: usize, j: i64, k: i64) -> CoeffPoly {
    let board = family.board(n);
    let mut engine = DpEngine::new(family.ring(), &board);
    family.entry(&mut engine, n, j, k)
}

/// `S_{mu,nu;q}(n; j, k) = m_{n-j, j-k}(J_n; q)`.
pub fn ore_stirling(n: usize, j: i64, k: i64) -> CoeffPoly {
    family_value(Family::OreStirling, n, j, k)
}

/// `L_{mu,nu;q}(n; j, k) = m_{2n-j, j-n-k}(L_n; q)`.
pub fn ore_lah(n: usize, j: i64, k: i64) -> CoeffPoly {
    family_value(Family::OreLah, n, j, k)
}

/// `S^{(r)}_{mu,nu;q}(n; j, k) = m_{rn-j, j-(r-1)n-k}(J_{n,r}; q)`.
pub fn ore_scherk(r: usize, n: usize, j: i64, k: i64) -> CoeffPoly {
    family_value(Family::OreScherk { r }, n, j, k)
}

pub fn poly_stirling(s: usize, n: usize, j: i64, k: i64) -> CoeffPoly {
    family_value(Family::PolyStirling { s }, n, j, k)
}

pub fn poly_lah(s: usize, n: usize, j: i64, k: i64) -> CoeffPoly {
    family_value(Family::PolyLah { s }, n, j, k)
}

pub fn poly_scherk(r: usize, s: usize, n: usize, j: i64, k: i64) -> CoeffPoly {
    family_value(Family::PolyScherk { r, s }, n, j, k)
}

/// The `q = 1` factorization `mu^{n-j} nu^{j-k} S(n,j) |s(j,k)|` of the
/// Ore-Stirling numbers, built from the standard Stirling recurrences.
pub fn ore_stirling_factorization(n: usize, j: i64, k: i64) -> CoeffPoly {
    let ring = Ring::new(1);
    if j < 0 || k < 0 || j > n as i64 || k > j {
        return ring.zero();
    }
    let (j, k) = (j as usize, k as usize);
    let scalar = &stirling2_table(n)[n][j] * &stirling1_unsigned_table(j)[j][k];
    ring.monomial(scalar, 0, &[(n - j) as u32, (j - k) as u32])
}

/// A fully built family table; entries absent from the map are zero.
#[derive(Clone, Debug)]
pub struct TriangularTable {
    family: Family,
    max_n: usize,
    entries: BTreeMap<(usize, usize, usize), CoeffPoly>,
}

impl TriangularTable {
    pub fn build(family: Family, max_n: usize) -> TriangularTable {
        let ring = family.ring();
        let mut entries = BTreeMap::new();
        for n in 0..=max_n {
            let board = family.board(n);
            let mut engine = DpEngine::new(ring, &board);
            for j in 0..=family.max_j(n) {
                for k in 0..=n {
                    let value = family.entry(&mut engine, n, j as i64, k as i64);
                    if !value.is_zero() {
                        entries.insert((n, j, k), value);
                    }
                }
            }
        }
        TriangularTable {
            family,
            max_n,
            entries,
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn max_n(&self) -> usize {
        self.max_n
    }

    /// Entry `(n; j, k)`; zero for any out-of-range index.
    pub fn get(&self, n: usize, j: i64, k: i64) -> CoeffPoly {
        assert!(n <= self.max_n, "row {n} beyond table bound {}", self.max_n);
        if j < 0 || k < 0 {
            return self.family.ring().zero();
        }
        self.entries
            .get(&(n, j as usize, k as usize))
            .cloned()
            .unwrap_or_else(|| self.family.ring().zero())
    }

    /// Nonzero entries in `(n, j, k)` order.
    pub fn rows(&self) -> impl Iterator<Item = (&(usize, usize, usize), &CoeffPoly)> {
        self.entries.iter()
    }
}

// ---------------------------------------------------------------------------
// recurrence verification
// ---------------------------------------------------------------------------

#[derive(Clone, Debug)]
pub struct RecurrenceViolation {
    pub n: usize,
    pub j: i64,
    pub k: i64,
    pub lhs: CoeffPoly,
    pub rhs: CoeffPoly,
}

#[derive(Clone, Debug)]
pub struct RecurrenceReport {
    pub family: Family,
    pub max_n: usize,
    pub checked: usize,
    pub violations: Vec<RecurrenceViolation>,
}

impl RecurrenceReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Verify the family's recurrence symbolically for every transition
/// `n -> n+1` with `n+1 <= max_n`, over the full index box of row `n+1`
/// plus a margin.
pub fn check_recurrences(family: Family, max_n: usize) -> RecurrenceReport {
    let ring = family.ring();
    let table = TriangularTable::build(family, max_n);
    // factor * value: the factor is only formed against nonzero values, whose
    // table index then guarantees a nonnegative exponent.
    let q_pow_term = |e: i64, value: &CoeffPoly| -> CoeffPoly {
        if value.is_zero() {
            ring.zero()
        } else {
            ring.q_pow(u32::try_from(e).expect("negative q power against nonzero entry"))
                .mul(value)
        }
    };
    let q_int_term = |alpha: usize, a: i64, value: &CoeffPoly| -> CoeffPoly {
        if value.is_zero() {
            ring.zero()
        } else {
            let arg = u32::try_from(a).expect("negative q-integer against nonzero entry");
            ring.alpha(alpha).mul(&ring.q_int(arg)).mul(value)
        }
    };

    let mut checked = 0;
    let mut violations = Vec::new();
    for n in 0..max_n {
        for j in 0..=(family.max_j(n + 1) as i64 + 2) {
            for k in 0..=(n as i64 + 2) {
                let lhs = table.get(n + 1, j, k);
                let rhs = match family {
                    Family::OreStirling => {
                        let a = q_pow_term(j - 1, &table.get(n, j - 1, k - 1));
                        let b = q_int_term(0, j, &table.get(n, j, k));
                        let c = q_int_term(1, j - 1, &table.get(n, j - 1, k));
                        &(&a + &b) + &c
                    }
                    Family::OreLah => {
                        let a = q_pow_term(j - 2, &table.get(n, j - 2, k - 1));
                        let b = q_int_term(0, j - 1, &table.get(n, j - 1, k));
                        let c = q_int_term(1, j - 2, &table.get(n, j - 2, k));
                        &(&a + &b) + &c
                    }
                    Family::OreScherk { r } => {
                        let ri = r as i64;
                        let a = q_pow_term(j - ri, &table.get(n, j - ri, k - 1));
                        let b = q_int_term(0, j - (ri - 1), &table.get(n, j - (ri - 1), k));
                        let c = q_int_term(1, j - 1 - (ri - 1), &table.get(n, j - 1 - (ri - 1), k));
                        &(&a + &b) + &c
                    }
                    Family::PolyStirling { s } => {
                        let mut acc = q_pow_term(j - 1, &table.get(n, j - 1, k - 1));
                        for r in 0..=s {
                            let ri = r as i64;
                            acc = &acc + &q_int_term(r, j - ri, &table.get(n, j - ri, k));
                        }
                        acc
                    }
                    Family::PolyLah { s } => {
                        let mut acc = q_pow_term(j - 2, &table.get(n, j - 2, k - 1));
                        for r in 0..=s {
                            let ri = r as i64;
                            acc = &acc + &q_int_term(r, j - ri - 1, &table.get(n, j - ri - 1, k));
                        }
                        acc
                    }
                    Family::PolyScherk { r, s } => {
                        let ri = r as i64;
                        let mut acc = q_pow_term(j - ri, &table.get(n, j - ri, k - 1));
                        for l in 0..=s {
                            let shift = j - l as i64 - (ri - 1);
                            acc = &acc + &q_int_term(l, shift, &table.get(n, shift, k));
                        }
                        acc
                    }
                };
                checked += 1;
                if lhs != rhs {
                    violations.push(RecurrenceViolation {
                        n: n + 1,
                        j,
                        k,
                        lhs,
                        rhs,
                    });
                }
            }
        }
    }
    RecurrenceReport {
        family,
        max_n,
        checked,
        violations,
    }
}

/// One instance of the master column-peeling recurrence, with both sides
/// computed by the sequential engine (which knows nothing about peeling).
#[derive(Clone, Debug)]
pub struct MainRecurrenceCheck {
    pub ktype: PlacementType,
    pub lhs: CoeffPoly,
    pub rhs: CoeffPoly,
}

impl MainRecurrenceCheck {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Check `m_k(B) = q^{h + c(k)} m_k(B') + sum_r alpha_r
/// [h + c(k) - (r-1)]_q m_{k^(r)}(B')` where `B'` drops the leftmost column
/// of height `h` and `c(k)` is the creation sum.
pub fn check_recurrence_main(
    ring: Ring,
    board: &Board,
    ktype: &PlacementType,
) -> Result<MainRecurrenceCheck, PlacementError> {
    assert!(board.columns() > 0, "need at least one column to peel");
    let sub_board = board.drop_leftmost_column();
    let full = sequential_table(ring, board, ktype)?;
    let sub = sequential_table(ring, &sub_board, ktype)?;
    let value = |table: &BTreeMap<PlacementType, CoeffPoly>, key: &PlacementType| {
        table.get(key).cloned().unwrap_or_else(|| ring.zero())
    };

    let lhs = value(&full, ktype);
    let h = board.height(board.columns() - 1) as i64;
    let creation = ktype.creation_sum();

    let mut rhs = ring.zero();
    let empty_sub = value(&sub, ktype);
    if !empty_sub.is_zero() {
        let e = h + creation;
        assert!(
            e >= 0,
            "negative exponent against a nonzero value on a Ferrers board"
        );
        rhs = &rhs + &ring.q_pow(e as u32).mul(&empty_sub);
    }
    for r in 0..ktype.nweights() {
        let Some(reduced) = ktype.reduced(r) else {
            continue;
        };
        let rook_sub = value(&sub, &reduced);
        if rook_sub.is_zero() {
            continue;
        }
        let avail = h + creation - (r as i64 - 1);
        assert!(
            avail >= 0,
            "negative q-integer against a nonzero value on a Ferrers board"
        );
        rhs = &rhs + &ring.alpha(r).mul(&ring.q_int(avail as u32)).mul(&rook_sub);
    }

    Ok(MainRecurrenceCheck {
        ktype: ktype.clone(),
        lhs,
        rhs,
    })
}

// ---------------------------------------------------------------------------
// rectangle boards
// ---------------------------------------------------------------------------

/// `r_k(R_{m,n}) = k! C(n,k) C(m,k)`.
pub fn rectangle_rook_count(m: usize, n: usize, k: usize) -> BigInt {
    factorial(k as u64) * binomial(n as i64, k as i64) * binomial(m as i64, k as i64)
}

/// `f_k(R_{m,n}) = n^k C(m,k)`.
pub fn rectangle_file_count(m: usize, n: usize, k: usize) -> BigInt {
    BigInt::from(n as u64).pow(k as u32) * binomial(m as i64, k as i64)
}

/// `|M_{k,l}(R_{m,n})|` by the block decomposition: choose the rook columns
/// right to left, then distribute the files into the gaps; a file in the
/// `j`-th gap sees `n + 1 - j` free rows.
pub fn rectangle_mixed_count(m: usize, n: usize, k: usize, ell: usize) -> BigInt {
    if k > n || k > m {
        return BigInt::zero();
    }
    let rook_rows = factorial(k as u64) * binomial(n as i64, k as i64);
    let mut total = BigInt::zero();
    for pi in k_subsets(m, k) {
        let mut gaps = Vec::with_capacity(k + 1);
        let mut prev = 0usize;
        for &p in &pi {
            gaps.push(p - prev - 1);
            prev = p;
        }
        gaps.push(m - prev);
        for rho in suiting_compositions(&gaps, ell) {
            let mut product = BigInt::one();
            for (j, (&size, &count)) in gaps.iter().zip(&rho).enumerate() {
                product *= binomial(size as i64, count as i64)
                    * BigInt::from((n - j) as u64).pow(count as u32);
            }
            total += product;
        }
    }
    rook_rows * total
}

/// All k-element subsets of `{1..m}`, each ascending.
fn k_subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(m: usize, k: usize, start: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for v in start..=m {
            current.push(v);
            rec(m, k, v + 1, current, out);
            current.pop();
        }
    }
    rec(m, k, 1, &mut current, &mut out);
    out
}

// ---------------------------------------------------------------------------
// the basic word X^m Y^n at q = 1, mu = nu = 1
// ---------------------------------------------------------------------------

/// The alternating sum `q_n(r,t) = sum_{k=n-t}^{n} (-1)^{n-k} C(t,n-k) k^r`
/// (with `0^0 = 1`). This is the normative route to the `X^m Y^n`
/// coefficients.
pub fn alternating_sum(n: usize, r: usize, t: usize) -> BigInt {
    let mut acc = BigInt::zero();
    for k in n.saturating_sub(t)..=n {
        let sign = if (n - k).is_multiple_of(2) { 1 } else { -1 };
        acc += BigInt::from(sign)
            * binomial(t as i64, (n - k) as i64)
            * BigInt::from(k as u64).pow(r as u32);
    }
    acc
}

/// The Eulerian-number expression `sum_{l=1}^{n} C(r-t+l, l) A(r, n-l)`
/// quoted for `q_n(r,t)`. Kept for the comparison report only; it is known
/// to disagree with the alternating sum at some indices.
pub fn eulerian_closed_form(n: usize, r: usize, t: usize) -> BigInt {
    let table = eulerian_table(r);
    let mut acc = BigInt::zero();
    for l in 1..=n {
        let d = n as i64 - l as i64;
        if d < 0 || d as usize > r {
            continue;
        }
        acc += binomial(r as i64 - t as i64 + l as i64, l as i64) * &table[r][d as usize];
    }
    acc
}

#[derive(Clone, Debug)]
pub struct EulerianComparison {
    pub n: usize,
    pub r: usize,
    pub t: usize,
    pub alternating: BigInt,
    pub closed_form: BigInt,
}

impl EulerianComparison {
    pub fn agree(&self) -> bool {
        self.alternating == self.closed_form
    }
}

/// Compare the alternating sum against the Eulerian expression on a grid of
/// indices. Disagreements are reported, never failed.
pub fn eulerian_comparison_report(max_n: usize, max_r: usize) -> Vec<EulerianComparison> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for r in 0..=max_r {
            for t in 0..=n {
                out.push(EulerianComparison {
                    n,
                    r,
                    t,
                    alternating: alternating_sum(n, r, t),
                    closed_form: eulerian_closed_form(n, r, t),
                });
            }
        }
    }
    out
}

/// Normal ordered form of `X^m Y^n` in the undeformed Ore algebra
/// (`q = 1`, `mu = nu = 1`): the coefficient of `Y^{n-t} X^{m-r}` is
/// `C(n,t) C(m,r) q_n(r,t)`.
pub fn basic_word_ore_formula(m: usize, n: usize) -> NormalForm {
    let ring = Ring::new(1);
    let mut form = NormalForm::new(ring);
    for t in 0..=n {
        for r in 0..=m {
            let c = binomial(n as i64, t as i64)
                * binomial(m as i64, r as i64)
                * alternating_sum(n, r, t);
            form.add_term(n - t, m - r, &ring.bigint(c));
        }
    }
    form
}

// ---------------------------------------------------------------------------
// the binomial (X+Y)^m
// ---------------------------------------------------------------------------

/// Normal ordered form of `(X+Y)^m` assembled from the Young-diagram
/// expansion: every length-`m` word corresponds to one diagram in a box, and
/// each diagram's word is normal ordered through its placement numbers.
pub fn binomial_normal_form(ring: Ring, m: usize) -> NormalForm {
    let mut form = NormalForm::new(ring);
    for ell in 0..=m {
        for diagram in enumerate_diagrams(m, ell) {
            // the diagram's parts are exactly the board heights of its word
            let mut heights = diagram.parts().to_vec();
            heights.reverse();
            let board = Board::from_heights_rtl(heights);
            let mut engine = DpEngine::new(ring, &board);
            for rooks in 0..=ell {
                for counts in weak_compositions(ring.nvars(), rooks) {
                    let ktype = PlacementType::new(counts);
                    let value = engine
                        .value(&ktype)
                        .expect("diagram boards are Ferrers")
                        .poly;
                    if value.is_zero() {
                        continue;
                    }
                    let y = (m - ell) as i64 + ktype.creation_sum();
                    assert!(y >= 0);
                    form.add_term(y as usize, ell - rooks, &value);
                }
            }
        }
    }
    form
}

/// The binomial coefficient polynomial
/// `M_{m,r,l,t}(q) = sum_{diagrams in the (m-l) x l box}
/// sum_{k in WC_{s+1}(l-r|t)} m_k(B;q)`.
pub fn poly_binomial_coefficient(ring: Ring, m: usize, r: usize, ell: usize, t: i64) -> CoeffPoly {
    let mut acc = ring.zero();
    if ell > m || r > ell {
        return acc;
    }
    let compositions = weak_compositions_with_creation(ring.nvars(), ell - r, t);
    if compositions.is_empty() {
        return acc;
    }
    for diagram in enumerate_diagrams(m, ell) {
        let mut heights = diagram.parts().to_vec();
        heights.reverse();
        let board = Board::from_heights_rtl(heights);
        let mut engine = DpEngine::new(ring, &board);
        for counts in &compositions {
            let value = engine
                .value(&PlacementType::new(counts.clone()))
                .expect("diagram boards are Ferrers")
                .poly;
            acc = &acc + &value;
        }
    }
    acc
}

/// The two-parameter case `O_{m,k,l,t}(q) = sum_{diagrams} m_{t,l-k-t}(B;q)`.
pub fn ore_binomial_coefficient(m: usize, k: usize, ell: usize, t: usize) -> CoeffPoly {
    poly_binomial_coefficient(Ring::new(1), m, k, ell, -(t as i64))
}

// ---------------------------------------------------------------------------
// named rectangular boards
// ---------------------------------------------------------------------------

#[derive(Clone, Debug)]
pub struct NamedBoardCheck {
    pub description: String,
    /// product formula, rectangle closed form, enumerated count
    pub values: Vec<BigInt>,
}

impl NamedBoardCheck {
    pub fn agree(&self) -> bool {
        self.values.windows(2).all(|w| w[0] == w[1])
    }
}

/// Evaluate a placement-number polynomial at `q = 1` and unit alphas.
pub fn count_at_ones(poly: &CoeffPoly) -> BigInt {
    poly.specialize_q(&BigInt::one())
        .specialize_alphas(&vec![BigInt::one(); poly.ring().nvars()])
        .expect("vector length matches the ring")
        .as_constant()
        .expect("specialized polynomial is constant")
}

fn count_sequential(board: &Board, ktype: &PlacementType) -> BigInt {
    let ring = Ring::new(ktype.nweights() - 1);
    let value = mixed_number_sequential(ring, board, ktype).expect("rectangles are Ferrers");
    count_at_ones(&value)
}

/// Identities for the (restricted) Abel and Laguerre boards. Each check
/// carries the product formula, the rectangle closed form, and the count
/// from sequential enumeration; all three must coincide. `r = 1` gives the
/// plain Abel board `R_{n-1,n}` and Laguerre board `R_{n,n-1}`.
pub fn named_board_report(max_n: usize, max_r: usize) -> Vec<NamedBoardCheck> {
    let mut out = Vec::new();
    for r in 1..=max_r {
        for n in r.max(1)..=max_n {
            for k in r..=n {
                // f_{n-k}(A_n^(r)) with A_n^(r) = R_{n-r, n}
                let formula = BigInt::from(n as u64).pow((n - k) as u32)
                    * binomial((n - r) as i64, (k - r) as i64);
                let closed = rectangle_file_count(n - r, n, n - k);
                let enumerated = count_sequential(
                    &Board::rectangle(n - r, n),
                    &PlacementType::rook_file(0, n - k),
                );
                out.push(NamedBoardCheck {
                    description: format!("f_{}(A_{n}^({r}))", n - k),
                    values: vec![formula, closed, enumerated],
                });

                // r_{n-k}(L_n^(r)) with L_n^(r) = R_{n+r-1, n-r}
                let formula = factorial((n + r - 1) as u64) / factorial((k + r - 1) as u64)
                    * binomial((n - r) as i64, (k - r) as i64);
                let closed = rectangle_rook_count(n + r - 1, n - r, n - k);
                let enumerated = count_sequential(
                    &Board::rectangle(n + r - 1, n - r),
                    &PlacementType::rook_file(n - k, 0),
                );
                out.push(NamedBoardCheck {
                    description: format!("r_{}(L_{n}^({r}))", n - k),
                    values: vec![formula, closed, enumerated],
                });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rewriter::{first_difference, normal_order};
    use crate::words::parse_word;

    fn ring1() -> Ring {
        Ring::new(1)
    }

    fn int(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn classical_tables() {
        let s2 = stirling2_table(7);
        assert_eq!(s2[4][2], int(7));
        assert_eq!(s2[7][3], int(301));
        let s1 = stirling1_unsigned_table(7);
        assert_eq!(s1[4][2], int(11));
        assert_eq!(s1[2][1], int(1));
        let lah = lah_table(6);
        assert_eq!(lah[3][1], int(6));
        assert_eq!(lah[3][2], int(6));
        assert_eq!(lah[4][2], int(36));
        let euler = eulerian_table(4);
        assert_eq!(&euler[3][..4], &[int(1), int(4), int(1), int(0)]);
        assert_eq!(euler[4][1], int(11));
    }

    #[test]
    fn weak_composition_families() {
        assert_eq!(weak_compositions(3, 2).len(), 6);
        assert_eq!(weak_compositions(1, 5), vec![vec![5]]);
        assert_eq!(weak_compositions(0, 0).len(), 1);
        assert!(weak_compositions(0, 2).is_empty());
        // the creation-sum classes partition WC_{s+1}(k)
        for s in 0..=3usize {
            for k in 0..=4usize {
                let all = weak_compositions(s + 1, k).len();
                let split: usize = (-(k as i64)..=(s as i64 - 1) * k as i64)
                    .map(|t| weak_compositions_with_creation(s + 1, k, t).len())
                    .sum();
                assert_eq!(all, split);
            }
        }
        assert_eq!(suiting_compositions(&[1, 0, 2], 2).len(), 2);
    }

    #[test]
    fn ore_stirling_values() {
        let r = ring1();
        assert_eq!(ore_stirling(3, 2, 1), r.parse("(2+q) mu nu").unwrap());
        for n in 0..=5usize {
            let jn = n * n.saturating_sub(1) / 2;
            assert_eq!(
                ore_stirling(n, n as i64, n as i64),
                r.q_pow(jn as u32),
                "S({n};n,n)"
            );
        }
        for n in 1..=5usize {
            assert_eq!(
                ore_stirling(n, 1, 1),
                r.monomial(BigInt::one(), 0, &[(n - 1) as u32, 0]),
                "S({n};1,1)"
            );
        }
        assert!(ore_stirling(3, 4, 1).is_zero());
        assert!(ore_stirling(3, 2, -1).is_zero());
    }

    #[test]
    fn ore_stirling_factorization_values() {
        let r = ring1();
        assert_eq!(
            ore_stirling_factorization(3, 2, 1),
            r.parse("3 mu nu").unwrap()
        );
        assert_eq!(
            ore_stirling_factorization(4, 2, 2),
            r.parse("7 mu^2").unwrap()
        );
        for n in 0..=5 {
            assert_eq!(ore_stirling_factorization(n, n as i64, n as i64), r.one());
        }
    }

    #[test]
    fn ore_lah_recovers_lah_numbers() {
        // L_{1,0;1}(n; n+k, k) = L(n,k)
        let lah = lah_table(5);
        for n in 1..=5usize {
            for k in 1..=n {
                let value = ore_lah(n, (n + k) as i64, k as i64)
                    .specialize_q(&BigInt::one())
                    .specialize_alphas(&[BigInt::one(), BigInt::zero()])
                    .unwrap()
                    .as_constant()
                    .unwrap();
                assert_eq!(value, lah[n][k], "L({n},{k})");
            }
        }
    }

    #[test]
    fn scherk_degenerations() {
        for n in 0..=4usize {
            for j in 0..=(2 * n) as i64 {
                for k in 0..=n as i64 {
                    assert_eq!(ore_scherk(1, n, j, k), ore_stirling(n, j, k));
                    assert_eq!(ore_scherk(2, n, j, k), ore_lah(n, j, k));
                    assert_eq!(poly_stirling(1, n, j, k), ore_stirling(n, j, k));
                    assert_eq!(poly_lah(1, n, j, k), ore_lah(n, j, k));
                    assert_eq!(poly_scherk(3, 1, n, j, k), ore_scherk(3, n, j, k));
                }
            }
        }
    }

    #[test]
    fn poly_stirling_jordan_entry() {
        // coefficient of Y^4 X^2 in (YX)^3 under s=2
        let r2 = Ring::new(2);
        assert_eq!(
            poly_stirling(2, 3, 4, 2),
            r2.parse("a2 (q + q^2 + q^3)").unwrap()
        );
    }

    #[test]
    fn ore_stirling_recurrence_spot_check() {
        // S(3;2,1) = q S(2;1,0) + mu [2]_q S(2;2,1) + nu [1]_q S(2;1,1)
        let r = ring1();
        assert!(ore_stirling(2, 1, 0).is_zero());
        assert_eq!(ore_stirling(2, 2, 1), r.parse("nu").unwrap());
        assert_eq!(ore_stirling(2, 1, 1), r.parse("mu").unwrap());
        let rhs = &r.parse("mu (1+q) nu").unwrap() + &r.parse("nu mu").unwrap();
        assert_eq!(ore_stirling(3, 2, 1), rhs);
    }

    #[test]
    fn recurrence_reports_clean() {
        for family in [
            Family::OreStirling,
            Family::OreLah,
            Family::OreScherk { r: 3 },
            Family::PolyStirling { s: 2 },
            Family::PolyLah { s: 2 },
            Family::PolyScherk { r: 2, s: 2 },
        ] {
            let report = check_recurrences(family, 4);
            assert!(report.checked > 0);
            assert!(
                report.passed(),
                "{} violated at {:?}",
                family.label(),
                report.violations.first().map(|v| (v.n, v.j, v.k))
            );
        }
    }

    #[test]
    fn recurrence_main_spot_checks() {
        let r3 = Ring::new(3);
        for board in [
            Board::staircase(4),
            Board::lah(3),
            Board::from_partition(&[4, 2, 2, 1]),
        ] {
            for counts in [vec![1, 1, 0, 1], vec![2, 0, 0, 0], vec![0, 1, 2, 0]] {
                let check = check_recurrence_main(r3, &board, &PlacementType::new(counts)).unwrap();
                assert!(check.holds(), "failed for {:?} on {:?}", check.ktype, board);
            }
        }
    }

    #[test]
    fn rectangle_counts() {
        assert_eq!(rectangle_mixed_count(2, 2, 1, 1), int(6));
        // corollary degenerations
        for m in 0..=5 {
            for n in 0..=5 {
                for k in 0..=5 {
                    assert_eq!(
                        rectangle_mixed_count(m, n, k, 0),
                        rectangle_rook_count(m, n, k)
                    );
                    assert_eq!(
                        rectangle_mixed_count(m, n, 0, k),
                        rectangle_file_count(m, n, k)
                    );
                }
            }
        }
        // m = n = 1 reproduces XY = YX + nu Y + mu I: three placements
        for (t, ell) in [(0, 0), (0, 1), (1, 0)] {
            assert_eq!(rectangle_mixed_count(1, 1, t, ell), int(1));
        }
        assert_eq!(rectangle_mixed_count(1, 1, 1, 1), int(0));
    }

    #[test]
    fn alternating_sum_values() {
        assert_eq!(alternating_sum(1, 0, 0), int(1));
        assert_eq!(alternating_sum(1, 1, 0), int(1));
        assert_eq!(alternating_sum(1, 0, 1), int(0));
        assert_eq!(alternating_sum(1, 1, 1), int(1));
        // a full alternating binomial row vanishes: t = n, r = 0
        for n in 1..=8 {
            assert_eq!(alternating_sum(n, 0, n), int(0));
        }
    }

    #[test]
    fn basic_word_small_case() {
        let form = basic_word_ore_formula(1, 1);
        let r = ring1();
        assert_eq!(form.coefficient(1, 1), r.one());
        assert_eq!(form.coefficient(1, 0), r.one());
        assert_eq!(form.coefficient(0, 0), r.one());
        assert_eq!(form.num_terms(), 3);
    }

    #[test]
    fn basic_word_matches_oracle() {
        let r = ring1();
        let ones = [BigInt::one(), BigInt::one()];
        for m in 1..=4usize {
            for n in 1..=4usize {
                let word = parse_word(&format!("X^{m}Y^{n}")).unwrap();
                let oracle = normal_order(&word, r)
                    .specialize_q(&BigInt::one())
                    .specialize_alphas(&ones)
                    .unwrap();
                let formula = basic_word_ore_formula(m, n);
                assert_eq!(
                    first_difference(&oracle, &formula).unwrap(),
                    None,
                    "X^{m} Y^{n}"
                );
            }
        }
    }

    #[test]
    fn eulerian_comparison_flags_known_discrepancy() {
        let report = eulerian_comparison_report(3, 3);
        let flagged = report
            .iter()
            .find(|c| c.n == 1 && c.r == 1 && c.t == 0)
            .unwrap();
        assert_eq!(flagged.alternating, int(1));
        assert_eq!(flagged.closed_form, int(2));
        assert!(!flagged.agree());
    }

    #[test]
    fn binomial_square() {
        let r = ring1();
        let form = binomial_normal_form(r, 2);
        assert_eq!(form.coefficient(2, 0), r.one());
        assert_eq!(form.coefficient(1, 1), r.parse("1+q").unwrap());
        assert_eq!(form.coefficient(0, 2), r.one());
        assert_eq!(form.coefficient(1, 0), r.parse("nu").unwrap());
        assert_eq!(form.coefficient(0, 0), r.parse("mu").unwrap());
        assert_eq!(form.num_terms(), 5);

        let trivial = binomial_normal_form(r, 0);
        assert_eq!(trivial.coefficient(0, 0), r.one());
        assert_eq!(trivial.num_terms(), 1);
    }

    #[test]
    fn quantum_plane_binomials() {
        // with all alphas zero, the coefficient of Y^{m-k} X^k is Gaussian
        let r = ring1();
        for m in 0..=6usize {
            let form = binomial_normal_form(r, m)
                .specialize_alphas(&[BigInt::zero(), BigInt::zero()])
                .unwrap();
            for k in 0..=m {
                assert_eq!(
                    form.coefficient(m - k, k),
                    r.q_binomial(m as u32, k as u32).unwrap(),
                    "binom({m},{k})_q"
                );
            }
        }
    }

    #[test]
    fn binomial_coefficient_identity() {
        // M_{m,k,l,-t} at s=1 equals O_{m,k,l,t}
        let r = ring1();
        for m in 0..=5usize {
            for ell in 0..=m {
                for k in 0..=ell {
                    for t in 0..=(ell - k) {
                        assert_eq!(
                            poly_binomial_coefficient(r, m, k, ell, -(t as i64)),
                            ore_binomial_coefficient(m, k, ell, t)
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn combinatorial_normal_form_matches_oracle_spot() {
        for (text, s) in [("(YX)^3", 1), ("X^2YXYX^2Y", 0), ("XYXY", 3), ("", 2)] {
            let ring = Ring::new(s);
            let word = parse_word(text).unwrap();
            let combinatorial = combinatorial_normal_form(ring, &word);
            let oracle = normal_order(&word, ring);
            assert_eq!(
                first_difference(&combinatorial, &oracle).unwrap(),
                None,
                "word {text} at s={s}"
            );
        }
    }

    #[test]
    fn named_board_checks_agree() {
        for check in named_board_report(6, 2) {
            assert!(check.agree(), "{}: {:?}", check.description, check.values);
        }
        // A_1 is the empty rectangle; only the empty placement counts
        assert_eq!(rectangle_file_count(0, 1, 0), int(1));
        // f_2(A_3) = 3^2 C(2,0) = 9
        assert_eq!(rectangle_file_count(2, 3, 2), int(9));
        // r_1(L_2) = 2!/1! C(1,0) = 2
        assert_eq!(rectangle_rook_count(2, 1, 1), int(2));
    }
}
