//! Weighted rook placements on Ferrers boards, computed by three mutually
//! independent engines.
//!
//! * **Static** (`mixed_number_static`): rooks and files placed on the fixed
//!   board geometry, weights read off a box classification. Only covers the
//!   two-weight case (rooks = weight 0, files = weight 1).
//! * **Sequential** (`mixed_number_sequential`): the row-creation process.
//!   Columns are consumed right to left; placing a rook of weight `w` changes
//!   the effective height of every later column by `w - 1`. Handles arbitrary
//!   weight vectors.
//! * **Recurrence** (`mixed_number_dp`): peels the leftmost column and sums
//!   over what sits in it, memoized over (columns consumed, type consumed).
//!
//! All three must agree wherever their domains overlap; the test suites turn
//! that statement into an executable check.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use thiserror::Error;

use crate::boards::{Board, CellGlyph};
use crate::coeffring::{CoeffPoly, Ring};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PlacementError {
    #[error("board is not a Ferrers board (heights must weakly increase right to left)")]
    NonFerrers,
    #[error("placement type has {got} weights but the ring provides {expected} (s+1)")]
    TypeMismatch { expected: usize, got: usize },
    #[error("ring degree bound s={s} cannot express a rook of weight {needed}")]
    RingTooSmall { needed: usize, s: usize },
    #[error("invalid placement: {0}")]
    InvalidPlacement(String),
    #[error("out-of-model input: {0}")]
    OutOfModel(String),
    #[error("internal invariant violated: {0}")]
    InternalInvariant(String),
}

/// Vector `k = (k_0, ..., k_s)` counting rooks of each weight.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct PlacementType {
    counts: Vec<usize>,
}

impl PlacementType {
    pub fn new(counts: Vec<usize>) -> PlacementType {
        PlacementType { counts }
    }

    /// The two-weight type `(k, ell)`: `k` rooks and `ell` files.
    pub fn rook_file(k: usize, ell: usize) -> PlacementType {
        PlacementType {
            counts: vec![k, ell],
        }
    }

    /// A pure type: `k` rooks of weight `weight`, inside `nweights` slots.
    pub fn pure(nweights: usize, weight: usize, k: usize) -> PlacementType {
        let mut counts = vec![0; nweights];
        counts[weight] = k;
        PlacementType { counts }
    }

    /// Cap vector allowing up to `per_weight` rooks of every weight.
    pub fn cap_all(nweights: usize, per_weight: usize) -> PlacementType {
        PlacementType {
            counts: vec![per_weight; nweights],
        }
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn nweights(&self) -> usize {
        self.counts.len()
    }

    /// `|k|`, the total number of rooks.
    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }

    /// `sum_j (j - 1) k_j`: the net number of rows created to the left.
    pub fn creation_sum(&self) -> i64 {
        self.counts
            .iter()
            .enumerate()
            .map(|(j, &k)| (j as i64 - 1) * k as i64)
            .sum()
    }

    /// `k^(r)`: reduce the count of weight `r` by one. `None` when that
    /// count is already zero.
    pub fn reduced(&self, r: usize) -> Option<PlacementType> {
        if r >= self.counts.len() || self.counts[r] == 0 {
            return None;
        }
        let mut counts = self.counts.clone();
        counts[r] -= 1;
        Some(PlacementType { counts })
    }

    fn check_ring(&self, ring: Ring) -> Result<(), PlacementError> {
        if self.counts.len() != ring.nvars() {
            return Err(PlacementError::TypeMismatch {
                expected: ring.nvars(),
                got: self.counts.len(),
            });
        }
        Ok(())
    }

    /// `alpha^k = prod alpha_j^{k_j}` in the given ring.
    pub fn alpha_factor(&self, ring: Ring) -> CoeffPoly {
        let mut exps = vec![0u32; ring.nvars()];
        for (j, &k) in self.counts.iter().enumerate() {
            exps[j] = k as u32;
        }
        ring.monomial(BigInt::from(1), 0, &exps)
    }
}

/// A cell addressed by right-to-left column index and 1-based row from the top.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Cell {
    pub col: usize,
    pub row: usize,
}

impl Cell {
    pub fn new(col: usize, row: usize) -> Cell {
        Cell { col, row }
    }
}

/// A placement of rooks and files on the fixed board geometry.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct StaticPlacement {
    pub rooks: Vec<Cell>,
    pub files: Vec<Cell>,
}

/// Per-cell label after classifying a placement.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BoxLabel {
    Rook { weight: usize },
    File,
    Cancelled,
    Empty,
}

/// The partition of a board's cells into rook/file/cancelled/empty boxes.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BoxClassification {
    board: Board,
    labels: Vec<Vec<BoxLabel>>,
}

impl BoxClassification {
    pub fn board(&self) -> &Board {
        &self.board
    }

    pub fn label(&self, cell: Cell) -> BoxLabel {
        self.labels[cell.col][cell.row - 1]
    }

    fn count(&self, pred: impl Fn(BoxLabel) -> bool) -> usize {
        self.labels
            .iter()
            .flat_map(|col| col.iter())
            .filter(|&&l| pred(l))
            .count()
    }

    pub fn empty_count(&self) -> usize {
        self.count(|l| l == BoxLabel::Empty)
    }

    pub fn cancelled_count(&self) -> usize {
        self.count(|l| l == BoxLabel::Cancelled)
    }

    /// `mu^{#rooks} nu^{#files} q^{#empty}` (general weights use the matching
    /// alpha variable per rook weight).
    pub fn weight(&self, ring: Ring) -> Result<CoeffPoly, PlacementError> {
        let mut alpha_exps = vec![0u32; ring.nvars()];
        for col in &self.labels {
            for &label in col {
                match label {
                    BoxLabel::Rook { weight } => {
                        if weight > ring.s() {
                            return Err(PlacementError::RingTooSmall {
                                needed: weight,
                                s: ring.s(),
                            });
                        }
                        alpha_exps[weight] += 1;
                    }
                    BoxLabel::File => {
                        if ring.s() < 1 {
                            return Err(PlacementError::RingTooSmall { needed: 1, s: 0 });
                        }
                        alpha_exps[1] += 1;
                    }
                    _ => {}
                }
            }
        }
        Ok(ring.monomial(BigInt::from(1), self.empty_count() as u32, &alpha_exps))
    }

    /// ASCII rendering with `R{w}` rooks, `x` cancelled and `.` empty boxes.
    pub fn render(&self) -> String {
        self.board
            .render_with(|col, row| match self.labels[col][row - 1] {
                BoxLabel::Rook { weight } => CellGlyph::Rook(weight),
                BoxLabel::File => CellGlyph::File,
                BoxLabel::Cancelled => CellGlyph::Cancelled,
                BoxLabel::Empty => CellGlyph::Empty,
            })
    }
}

/// Classify the boxes of `board` under a static rook/file placement.
///
/// Cancelled boxes are those lying above a rook in the same column, to the
/// left of a rook in the same row, or above a file in the same column.
pub fn classify_static(
    board: &Board,
    placement: &StaticPlacement,
) -> Result<BoxClassification, PlacementError> {
    if !board.is_ferrers() {
        return Err(PlacementError::NonFerrers);
    }
    for &cell in placement.rooks.iter().chain(&placement.files) {
        if !board.contains_cell(cell.col, cell.row) {
            return Err(PlacementError::InvalidPlacement(format!(
                "cell (col {}, row {}) lies outside the board",
                cell.col, cell.row
            )));
        }
    }
    for (i, a) in placement.rooks.iter().enumerate() {
        for b in &placement.rooks[i + 1..] {
            if a.row == b.row {
                return Err(PlacementError::InvalidPlacement(
                    "two rooks lie in the same row".into(),
                ));
            }
            if a.col == b.col {
                return Err(PlacementError::InvalidPlacement(
                    "two rooks lie in the same column".into(),
                ));
            }
        }
    }
    for (i, a) in placement.files.iter().enumerate() {
        for b in &placement.files[i + 1..] {
            if a.col == b.col {
                return Err(PlacementError::InvalidPlacement(
                    "two files lie in the same column".into(),
                ));
            }
        }
    }
    for file in &placement.files {
        for rook in &placement.rooks {
            if file.col == rook.col {
                return Err(PlacementError::InvalidPlacement(
                    "a file and a rook lie in the same column".into(),
                ));
            }
            if file.row == rook.row && file.col > rook.col {
                return Err(PlacementError::InvalidPlacement(
                    "a file lies to the left of a rook in the same row".into(),
                ));
            }
        }
    }

    let mut labels: Vec<Vec<BoxLabel>> = board
        .heights_rtl()
        .iter()
        .map(|&h| vec![BoxLabel::Empty; h])
        .collect();
    for &cell in &placement.rooks {
        labels[cell.col][cell.row - 1] = BoxLabel::Rook { weight: 0 };
        // above the rook in the same column
        for row in 1..cell.row {
            labels[cell.col][row - 1] = BoxLabel::Cancelled;
        }
        // to the left of the rook in the same row
        for col in cell.col + 1..board.columns() {
            if board.contains_cell(col, cell.row) {
                labels[col][cell.row - 1] = BoxLabel::Cancelled;
            }
        }
    }
    for &cell in &placement.files {
        for row in 1..cell.row {
            if labels[cell.col][row - 1] == BoxLabel::Empty {
                labels[cell.col][row - 1] = BoxLabel::Cancelled;
            }
        }
    }
    // file boxes last: a file may sit in the row of a rook to its left
    for &cell in &placement.files {
        labels[cell.col][cell.row - 1] = BoxLabel::File;
    }
    Ok(BoxClassification {
        board: board.clone(),
        labels,
    })
}

/// Enumerate every non-attacking placement of at most `max_rooks` rooks and
/// `max_files` files on a Ferrers board.
pub fn static_placements(
    board: &Board,
    max_rooks: usize,
    max_files: usize,
) -> Result<Vec<StaticPlacement>, PlacementError> {
    if !board.is_ferrers() {
        return Err(PlacementError::NonFerrers);
    }
    assert!(
        board.max_height() < 64,
        "static enumeration tracks rook rows in a 64-bit mask"
    );
    let mut out = Vec::new();
    let mut current = StaticPlacement::default();

    fn rec(
        board: &Board,
        col: usize,
        rook_rows: u64,
        max_rooks: usize,
        max_files: usize,
        current: &mut StaticPlacement,
        out: &mut Vec<StaticPlacement>,
    ) {
        if col == board.columns() {
            out.push(current.clone());
            return;
        }
        // leave the column empty
        rec(
            board,
            col + 1,
            rook_rows,
            max_rooks,
            max_files,
            current,
            out,
        );
        let h = board.height(col);
        for row in 1..=h {
            let bit = 1u64 << row;
            // a rook must avoid the rows of rooks already placed to its right
            if current.rooks.len() < max_rooks && rook_rows & bit == 0 {
                current.rooks.push(Cell::new(col, row));
                rec(
                    board,
                    col + 1,
                    rook_rows | bit,
                    max_rooks,
                    max_files,
                    current,
                    out,
                );
                current.rooks.pop();
            }
            // a file must not lie to the left of a rook in the same row
            if current.files.len() < max_files && rook_rows & bit == 0 {
                current.files.push(Cell::new(col, row));
                rec(
                    board,
                    col + 1,
                    rook_rows,
                    max_rooks,
                    max_files,
                    current,
                    out,
                );
                current.files.pop();
            }
        }
    }

    rec(board, 0, 0, max_rooks, max_files, &mut current, &mut out);
    Ok(out)
}

/// All static mixed placement numbers `m_{k,l}(B;q)` with `k <= max_rooks`,
/// `l <= max_files`, from one enumeration pass. Missing keys are zero.
pub fn static_table(
    ring: Ring,
    board: &Board,
    max_rooks: usize,
    max_files: usize,
) -> Result<BTreeMap<(usize, usize), CoeffPoly>, PlacementError> {
    if ring.s() < 1 {
        return Err(PlacementError::RingTooSmall { needed: 1, s: 0 });
    }
    let mut table: BTreeMap<(usize, usize), CoeffPoly> = BTreeMap::new();
    for placement in static_placements(board, max_rooks, max_files)? {
        let class = classify_static(board, &placement)?;
        let weight = class.weight(ring)?;
        let key = (placement.rooks.len(), placement.files.len());
        let entry = table.entry(key).or_insert_with(|| ring.zero());
        *entry = &*entry + &weight;
    }
    table.retain(|_, v| !v.is_zero());
    Ok(table)
}

/// `m_{k,l}(B;q)` by exhaustive static enumeration.
pub fn mixed_number_static(
    ring: Ring,
    board: &Board,
    k: usize,
    ell: usize,
) -> Result<CoeffPoly, PlacementError> {
    let table = static_table(ring, board, k, ell)?;
    Ok(table.get(&(k, ell)).cloned().unwrap_or_else(|| ring.zero()))
}

/// One decision of the sequential process at a single column.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ColumnDecision {
    Empty,
    /// A rook of the given weight at `position` (1-based from the top of the
    /// effective column).
    Rook {
        weight: usize,
        position: usize,
    },
}

/// A full decision sequence, one entry per column, rightmost first.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SequentialPlacement {
    pub decisions: Vec<ColumnDecision>,
}

impl SequentialPlacement {
    pub fn placement_type(&self, nweights: usize) -> PlacementType {
        let mut counts = vec![0usize; nweights];
        for d in &self.decisions {
            if let ColumnDecision::Rook { weight, .. } = d {
                counts[*weight] += 1;
            }
        }
        PlacementType::new(counts)
    }

    /// The q-weight `alpha^k q^{#empty boxes}` of this decision sequence,
    /// validating every effective height and position on the way.
    pub fn weight(&self, ring: Ring, board: &Board) -> Result<CoeffPoly, PlacementError> {
        if !board.is_ferrers() {
            return Err(PlacementError::NonFerrers);
        }
        if self.decisions.len() != board.columns() {
            return Err(PlacementError::InvalidPlacement(format!(
                "{} decisions for {} columns",
                self.decisions.len(),
                board.columns()
            )));
        }
        let mut delta: i64 = 0;
        let mut q_exp: u64 = 0;
        let mut alpha_exps = vec![0u32; ring.nvars()];
        for (col, decision) in self.decisions.iter().enumerate() {
            let eff = board.height(col) as i64 + delta;
            debug_assert!(eff >= 0, "effective height must stay nonnegative");
            match *decision {
                ColumnDecision::Empty => q_exp += eff as u64,
                ColumnDecision::Rook { weight, position } => {
                    if weight > ring.s() {
                        return Err(PlacementError::RingTooSmall {
                            needed: weight,
                            s: ring.s(),
                        });
                    }
                    if position == 0 || (position as i64) > eff {
                        return Err(PlacementError::InvalidPlacement(format!(
                            "position {position} outside effective height {eff} at column {col}"
                        )));
                    }
                    alpha_exps[weight] += 1;
                    q_exp += (eff - position as i64) as u64;
                    delta += weight as i64 - 1;
                }
            }
        }
        Ok(ring.monomial(BigInt::from(1), q_exp as u32, &alpha_exps))
    }
}

/// Enumerate the decision sequences whose type is bounded componentwise by
/// `cap`. Intended for small boards; the counting engines below avoid
/// materializing placements.
pub fn sequential_placements(
    board: &Board,
    cap: &PlacementType,
) -> Result<Vec<SequentialPlacement>, PlacementError> {
    if !board.is_ferrers() {
        return Err(PlacementError::NonFerrers);
    }
    let mut out = Vec::new();
    let mut decisions = Vec::with_capacity(board.columns());
    let mut used = vec![0usize; cap.nweights()];

    fn rec(
        board: &Board,
        cap: &[usize],
        col: usize,
        delta: i64,
        used: &mut Vec<usize>,
        decisions: &mut Vec<ColumnDecision>,
        out: &mut Vec<SequentialPlacement>,
    ) {
        if col == board.columns() {
            out.push(SequentialPlacement {
                decisions: decisions.clone(),
            });
            return;
        }
        let eff = board.height(col) as i64 + delta;
        assert!(
            eff >= 0,
            "effective height went negative on a Ferrers board"
        );
        decisions.push(ColumnDecision::Empty);
        rec(board, cap, col + 1, delta, used, decisions, out);
        decisions.pop();
        for weight in 0..cap.len() {
            if used[weight] == cap[weight] {
                continue;
            }
            used[weight] += 1;
            for position in 1..=eff.max(0) as usize {
                decisions.push(ColumnDecision::Rook { weight, position });
                rec(
                    board,
                    cap,
                    col + 1,
                    delta + weight as i64 - 1,
                    used,
                    decisions,
                    out,
                );
                decisions.pop();
            }
            used[weight] -= 1;
        }
    }

    rec(
        board,
        cap.counts(),
        0,
        0,
        &mut used,
        &mut decisions,
        &mut out,
    );
    Ok(out)
}

/// Sequential engine: all `m_k(B;q)` with `k <= cap` componentwise, from one
/// decision-tree walk. Exponent histograms are accumulated per type and only
/// converted to polynomials at the end.
pub fn sequential_table(
    ring: Ring,
    board: &Board,
    cap: &PlacementType,
) -> Result<BTreeMap<PlacementType, CoeffPoly>, PlacementError> {
    cap.check_ring(ring)?;
    if !board.is_ferrers() {
        return Err(PlacementError::NonFerrers);
    }

    struct Walk<'a> {
        board: &'a Board,
        cap: &'a [usize],
        used: Vec<usize>,
        histograms: HashMap<Vec<usize>, Vec<u64>>,
    }

    impl Walk<'_> {
        fn go(&mut self, col: usize, delta: i64, q_exp: u64) {
            if col == self.board.columns() {
                let hist = self.histograms.entry(self.used.clone()).or_default();
                if hist.len() <= q_exp as usize {
                    hist.resize(q_exp as usize + 1, 0);
                }
                hist[q_exp as usize] += 1;
                return;
            }
            let eff = self.board.height(col) as i64 + delta;
            assert!(
                eff >= 0,
                "effective height went negative on a Ferrers board"
            );
            self.go(col + 1, delta, q_exp + eff as u64);
            if eff >= 1 {
                for weight in 0..self.cap.len() {
                    if self.used[weight] == self.cap[weight] {
                        continue;
                    }
                    self.used[weight] += 1;
                    let next_delta = delta + weight as i64 - 1;
                    for position in 1..=eff as u64 {
                        self.go(col + 1, next_delta, q_exp + (eff as u64 - position));
                    }
                    self.used[weight] -= 1;
                }
            }
        }
    }

    let mut walk = Walk {
        board,
        cap: cap.counts(),
        used: vec![0; cap.nweights()],
        histograms: HashMap::new(),
    };
    walk.go(0, 0, 0);

    let mut table = BTreeMap::new();
    for (counts, hist) in walk.histograms {
        let ktype = PlacementType::new(counts);
        let mut poly = ring.zero();
        for (e, &count) in hist.iter().enumerate() {
            if count != 0 {
                poly =
                    &poly + &ring.monomial(BigInt::from(count), e as u32, &vec![0; ring.nvars()]);
            }
        }
        table.insert(ktype.clone(), poly.mul(&ktype.alpha_factor(ring)));
    }
    Ok(table)
}

/// `m_k(B;q)` by the sequential decision-tree walk.
pub fn mixed_number_sequential(
    ring: Ring,
    board: &Board,
    ktype: &PlacementType,
) -> Result<CoeffPoly, PlacementError> {
    let table = sequential_table(ring, board, ktype)?;
    Ok(table.get(ktype).cloned().unwrap_or_else(|| ring.zero()))
}

/// Result of the recurrence engine. `out_of_model` marks values computed on
/// non-Ferrers boards, where the recurrence is only formally defined.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DpValue {
    pub poly: CoeffPoly,
    pub out_of_model: bool,
}

/// Column-peeling engine with a memo table shared across queries on one board.
pub struct DpEngine<'a> {
    ring: Ring,
    board: &'a Board,
    ferrers: bool,
    memo: HashMap<(usize, Vec<usize>), CoeffPoly>,
}

impl<'a> DpEngine<'a> {
    pub fn new(ring: Ring, board: &'a Board) -> DpEngine<'a> {
        DpEngine {
            ring,
            board,
            ferrers: board.is_ferrers(),
            memo: HashMap::new(),
        }
    }

    pub fn board(&self) -> &Board {
        self.board
    }

    /// `m_k(B;q)` via the column-peeling recurrence: the leftmost column is
    /// either left empty (contributing `q^{effective height}`) or holds one
    /// rook of some weight `r` (contributing `alpha_r [effective height]_q`
    /// against the reduced type).
    pub fn value(&mut self, ktype: &PlacementType) -> Result<DpValue, PlacementError> {
        ktype.check_ring(self.ring)?;
        let q_part = self.recurse(self.board.columns(), ktype)?;
        Ok(DpValue {
            poly: q_part.mul(&ktype.alpha_factor(self.ring)),
            out_of_model: !self.ferrers,
        })
    }

    fn negative_height(&self, what: &str, value: i64) -> PlacementError {
        if self.ferrers {
            debug_assert!(false, "negative {what} ({value}) on a Ferrers board");
            PlacementError::InternalInvariant(format!(
                "negative {what} ({value}) on a Ferrers board"
            ))
        } else {
            PlacementError::OutOfModel(format!(
                "negative {what} ({value}) while peeling a non-Ferrers board"
            ))
        }
    }

    fn recurse(&mut self, cols: usize, ktype: &PlacementType) -> Result<CoeffPoly, PlacementError> {
        if cols == 0 {
            return Ok(if ktype.total() == 0 {
                self.ring.one()
            } else {
                self.ring.zero()
            });
        }
        let key = (cols, ktype.counts().to_vec());
        if let Some(hit) = self.memo.get(&key) {
            return Ok(hit.clone());
        }
        let lam = self.board.height(cols - 1) as i64;
        let creation = ktype.creation_sum();
        let mut acc = self.ring.zero();

        // leftmost column left empty: all rooks sit to its right
        let sub = self.recurse(cols - 1, ktype)?;
        if !sub.is_zero() {
            let exponent = lam + creation;
            if exponent < 0 {
                return Err(self.negative_height("empty-column exponent", exponent));
            }
            acc = &acc + &self.ring.q_pow(exponent as u32).mul(&sub);
        }

        // leftmost column holds one rook of weight r
        for r in 0..ktype.nweights() {
            let Some(reduced) = ktype.reduced(r) else {
                continue;
            };
            let sub = self.recurse(cols - 1, &reduced)?;
            if sub.is_zero() {
                continue;
            }
            let avail = lam + creation - (r as i64 - 1);
            if avail < 0 {
                return Err(self.negative_height("q-integer argument", avail));
            }
            acc = &acc + &self.ring.q_int(avail as u32).mul(&sub);
        }

        self.memo.insert(key, acc.clone());
        Ok(acc)
    }
}

/// One-shot wrapper around [`DpEngine`].
pub fn mixed_number_dp(
    ring: Ring,
    board: &Board,
    ktype: &PlacementType,
) -> Result<DpValue, PlacementError> {
    DpEngine::new(ring, board).value(ktype)
}

/// The sequence `(r_k^{(weight)}(B;q))_{k=0..columns}` of pure-type placement
/// numbers: at `q = 1` and unit alphas, weight 0 gives the classical rook
/// numbers and weight 1 the file numbers.
pub fn rook_numbers(
    ring: Ring,
    board: &Board,
    weight: usize,
) -> Result<Vec<CoeffPoly>, PlacementError> {
    if weight > ring.s() {
        return Err(PlacementError::RingTooSmall {
            needed: weight,
            s: ring.s(),
        });
    }
    let mut engine = DpEngine::new(ring, board);
    (0..=board.columns())
        .map(|k| {
            engine
                .value(&PlacementType::pure(ring.nvars(), weight, k))
                .map(|v| v.poly)
        })
        .collect()
}
