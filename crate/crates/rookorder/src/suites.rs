//! Executable verification suites: every structural claim the crate makes
//! (oracle equivalence, engine agreement, recurrences, closed forms,
//! binomial theorems, classical specializations) as deterministic,
//! seed-reproducible checks. The CLI `verify` command and the acceptance
//! tests are thin layers over these functions.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::boards::Board;
use crate::coeffring::Ring;
use crate::numbers;
use crate::numbers::{
    basic_word_ore_formula, binomial_normal_form, check_recurrence_main, check_recurrences,
    combinatorial_normal_form, count_at_ones, eulerian_comparison_report, lah_table,
    named_board_report, ore_binomial_coefficient, ore_lah, ore_scherk, ore_stirling,
    ore_stirling_factorization, rectangle_mixed_count, stirling1_unsigned_table, stirling2_table,
    weak_compositions, Family,
};
use crate::placements::{sequential_table, static_table, DpEngine, PlacementType};
use crate::rewriter::{first_difference, normal_order, normal_order_expression, MixedExpression};
use crate::words::{Letter, Word};

/// Tunable bounds for the suites. The defaults match the documented
/// acceptance bounds.
#[derive(Clone, Debug)]
pub struct SuiteConfig {
    /// Exhaustive oracle check covers all words up to this length.
    pub max_len: usize,
    /// Number of seeded random words for the oracle check.
    pub random_words: usize,
    /// Maximum length of the random words.
    pub random_len: usize,
    /// Engine agreement covers every Ferrers board with at most this many cells.
    pub max_cells: usize,
    /// Word-board engine agreement covers all words up to this length.
    pub engine_word_len: usize,
    /// Relation degree bounds exercised by the word-level checks.
    pub s_values: Vec<usize>,
    /// Seed for all randomized parts.
    pub seed: u64,
    /// Number of random (board, type) trials for the master recurrence.
    pub main_recurrence_trials: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            max_len: 8,
            random_words: 200,
            random_len: 12,
            max_cells: 12,
            engine_word_len: 8,
            s_values: vec![0, 1, 2, 3],
            seed: 0x524f4f4b, // "ROOK"
            main_recurrence_trials: 50,
        }
    }
}

/// Outcome of one suite: counts, failures (each a human-readable line), and
/// informational notes that do not affect the verdict.
#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub name: String,
    pub cases: usize,
    pub failures: Vec<String>,
    pub info: Vec<String>,
}

impl SuiteReport {
    fn new(name: &str) -> SuiteReport {
        SuiteReport {
            name: name.to_string(),
            cases: 0,
            failures: Vec::new(),
            info: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(detail());
        }
    }

    pub fn summary(&self) -> String {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        let mut line = format!(
            "suite {}: {} ({} cases, {} failures)",
            self.name,
            verdict,
            self.cases,
            self.failures.len()
        );
        if let Some(first) = self.failures.first() {
            line.push_str(&format!("\n  first failure: {first}"));
        }
        for note in &self.info {
            line.push_str(&format!("\n  note: {note}"));
        }
        line
    }
}

fn all_words_of_length(len: usize) -> impl Iterator<Item = Word> {
    (0..(1u64 << len)).map(move |bits| {
        Word::new(
            (0..len)
                .map(|i| {
                    if bits >> i & 1 == 1 {
                        Letter::Y
                    } else {
                        Letter::X
                    }
                })
                .collect(),
        )
    })
}

fn random_word(rng: &mut ChaCha8Rng, max_len: usize) -> Word {
    let len = rng.gen_range(1..=max_len);
    Word::new(
        (0..len)
            .map(|_| {
                if rng.gen_bool(0.5) {
                    Letter::Y
                } else {
                    Letter::X
                }
            })
            .collect(),
    )
}

fn random_ferrers(rng: &mut ChaCha8Rng, max_cols: usize, max_height: usize) -> Board {
    let cols = rng.gen_range(1..=max_cols);
    let mut heights: Vec<usize> = (0..cols).map(|_| rng.gen_range(0..=max_height)).collect();
    heights.sort_unstable();
    Board::from_heights_rtl(heights)
}

fn random_type(rng: &mut ChaCha8Rng, nweights: usize, max_total: usize) -> PlacementType {
    let total = rng.gen_range(0..=max_total);
    let mut counts = vec![0usize; nweights];
    for _ in 0..total {
        counts[rng.gen_range(0..nweights)] += 1;
    }
    PlacementType::new(counts)
}

/// All Ferrers boards (positive column heights) with at most `max_cells`
/// cells, including the empty board.
fn ferrers_boards_up_to(max_cells: usize) -> Vec<Board> {
    let mut out = vec![Board::from_heights_rtl(vec![])];
    // partitions as weakly increasing right-to-left height lists
    fn rec(heights: &mut Vec<usize>, min_next: usize, left: usize, out: &mut Vec<Board>) {
        for h in min_next..=left {
            heights.push(h);
            out.push(Board::from_heights_rtl(heights.clone()));
            rec(heights, h, left - h, out);
            heights.pop();
        }
    }
    let mut heights = Vec::new();
    rec(&mut heights, 1, max_cells, &mut out);
    out
}

/// Oracle equivalence: the combinatorial normal form equals the rewriting
/// normal form, exhaustively on short words and on seeded random words.
pub fn suite_oracle(config: &SuiteConfig) -> SuiteReport {
    let mut report = SuiteReport::new("oracle");
    for len in 0..=config.max_len {
        for word in all_words_of_length(len) {
            for &s in &config.s_values {
                let ring = Ring::new(s);
                let combinatorial = combinatorial_normal_form(ring, &word);
                let oracle = normal_order(&word, ring);
                let diff = first_difference(&combinatorial, &oracle).unwrap();
                report.check(diff.is_none(), || {
                    format!("word {word} at s={s}: {}", diff.unwrap())
                });
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    for _ in 0..config.random_words {
        let word = random_word(&mut rng, config.random_len);
        for &s in &config.s_values {
            let ring = Ring::new(s);
            let combinatorial = combinatorial_normal_form(ring, &word);
            let oracle = normal_order(&word, ring);
            let diff = first_difference(&combinatorial, &oracle).unwrap();
            report.check(diff.is_none(), || {
                format!("random word {word} at s={s}: {}", diff.unwrap())
            });
        }
    }
    report
}

/// Engine agreement: static = sequential = recurrence on small Ferrers
/// boards (two weights), and sequential = recurrence for higher weights on
/// word boards.
pub fn suite_engines(config: &SuiteConfig) -> SuiteReport {
    let mut report = SuiteReport::new("engines");
    let ring = Ring::new(1);
    for board in ferrers_boards_up_to(config.max_cells) {
        let cols = board.columns();
        let static_values = static_table(ring, &board, cols, cols).unwrap();
        let sequential_values =
            sequential_table(ring, &board, &PlacementType::cap_all(2, cols)).unwrap();
        let mut dp = DpEngine::new(ring, &board);
        for k in 0..=cols {
            for ell in 0..=cols {
                let ktype = PlacementType::rook_file(k, ell);
                let st = static_values
                    .get(&(k, ell))
                    .cloned()
                    .unwrap_or_else(|| ring.zero());
                let seq = sequential_values
                    .get(&ktype)
                    .cloned()
                    .unwrap_or_else(|| ring.zero());
                let rec = dp.value(&ktype).unwrap().poly;
                report.check(st == seq && st == rec, || {
                    format!(
                        "board {:?} at (k={k}, l={ell}): static={st}, sequential={seq}, dp={rec}",
                        board.heights_rtl()
                    )
                });
            }
        }
    }
    for len in 0..=config.engine_word_len {
        for word in all_words_of_length(len) {
            let board = Board::from_word(&word);
            let cols = board.columns();
            for &s in &config.s_values {
                let ring = Ring::new(s);
                let sequential_values =
                    sequential_table(ring, &board, &PlacementType::cap_all(s + 1, cols)).unwrap();
                let mut dp = DpEngine::new(ring, &board);
                for total in 0..=cols {
                    for counts in weak_compositions(s + 1, total) {
                        let ktype = PlacementType::new(counts);
                        let seq = sequential_values
                            .get(&ktype)
                            .cloned()
                            .unwrap_or_else(|| ring.zero());
                        let rec = dp.value(&ktype).unwrap().poly;
                        report.check(seq == rec, || {
                            format!(
                                "word {word} at s={s}, type {:?}: sequential={seq}, dp={rec}",
                                ktype.counts()
                            )
                        });
                    }
                }
            }
        }
    }
    report
}

/// All family recurrences at the documented bounds, plus seeded random
/// instances of the master column-peeling recurrence cross-checked with the
/// sequential engine.
pub fn suite_recurrences(config: &SuiteConfig) -> SuiteReport {
    let mut report = SuiteReport::new("recurrences");
    let families: Vec<(Family, usize)> = vec![
        (Family::OreStirling, 7),
        (Family::OreLah, 6),
        (Family::PolyStirling { s: 1 }, 6),
        (Family::PolyStirling { s: 2 }, 6),
        (Family::PolyStirling { s: 3 }, 6),
        (Family::PolyLah { s: 1 }, 6),
        (Family::PolyLah { s: 2 }, 6),
        (Family::PolyLah { s: 3 }, 6),
        (Family::OreScherk { r: 1 }, 5),
        (Family::OreScherk { r: 2 }, 5),
        (Family::OreScherk { r: 3 }, 5),
        (Family::PolyScherk { r: 2, s: 2 }, 5),
        (Family::PolyScherk { r: 3, s: 2 }, 5),
    ];
    for (family, max_n) in families {
        let rec = check_recurrences(family, max_n);
        report.cases += rec.checked;
        if !rec.passed() {
            let v = &rec.violations[0];
            report.failures.push(format!(
                "{} recurrence fails at (n={}, j={}, k={}): table={}, recurrence={}",
                family.label(),
                v.n,
                v.j,
                v.k,
                v.lhs,
                v.rhs
            ));
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(config.seed ^ 0x6d61696e);
    for _ in 0..config.main_recurrence_trials {
        let board = random_ferrers(&mut rng, 10, 8);
        let s = rng.gen_range(0..=3usize);
        let ktype = random_type(&mut rng, s + 1, 4);
        let check = check_recurrence_main(Ring::new(s), &board, &ktype).unwrap();
        report.check(check.holds(), || {
            format!(
                "master recurrence fails on board {:?} with type {:?}: lhs={}, rhs={}",
                board.heights_rtl(),
                check.ktype.counts(),
                check.lhs,
                check.rhs
            )
        });
    }
    report
}

/// Rectangle closed forms against enumeration, the basic-word formula
/// against the oracle, and the named-board identities. The Eulerian
/// closed-form comparison is reported informationally; the known
/// discrepancy must show up.
pub fn suite_closed_forms(_config: &SuiteConfig) -> SuiteReport {
    let mut report = SuiteReport::new("closed-forms");
    let ring = Ring::new(1);

    // |M_{k,l}(R_{m,n})| closed form vs static enumeration, all m,n <= 5
    for m in 0..=5usize {
        for n in 0..=5usize {
            let board = Board::rectangle(m, n);
            let enumerated = static_table(ring, &board, m, m).unwrap();
            for k in 0..=m {
                for ell in 0..=m {
                    let closed = rectangle_mixed_count(m, n, k, ell);
                    let counted = enumerated
                        .get(&(k, ell))
                        .map(count_at_ones)
                        .unwrap_or_else(BigInt::zero);
                    report.check(closed == counted, || {
                        format!(
                            "|M_{{{k},{ell}}}(R_{{{m},{n}}})|: closed form {closed}, enumeration {counted}"
                        )
                    });
                }
            }
        }
    }

    // r_k and f_k closed forms on rectangles up to 6 x 6, from pure-type walks
    for m in 0..=6usize {
        for n in 0..=6usize {
            let board = Board::rectangle(m, n);
            let rook_counts =
                sequential_table(ring, &board, &PlacementType::rook_file(m, 0)).unwrap();
            let file_counts =
                sequential_table(ring, &board, &PlacementType::rook_file(0, m)).unwrap();
            for k in 0..=m {
                let closed = numbers::rectangle_rook_count(m, n, k);
                let counted = rook_counts
                    .get(&PlacementType::rook_file(k, 0))
                    .map(count_at_ones)
                    .unwrap_or_else(BigInt::zero);
                report.check(closed == counted, || {
                    format!("r_{k}(R_{{{m},{n}}}): closed form {closed}, enumeration {counted}")
                });
                let closed = numbers::rectangle_file_count(m, n, k);
                let counted = file_counts
                    .get(&PlacementType::rook_file(0, k))
                    .map(count_at_ones)
                    .unwrap_or_else(BigInt::zero);
                report.check(closed == counted, || {
                    format!("f_{k}(R_{{{m},{n}}}): closed form {closed}, enumeration {counted}")
                });
            }
        }
    }

    // the composition double sum against the alternating sum:
    // |M_{t,r-t}(R_{m,n})| = C(n,t) C(m,r) q_n(r,t), both sides integral
    for m in 0..=5usize {
        for n in 0..=5usize {
            for r in 0..=m {
                for t in 0..=r.min(n) {
                    let lhs = rectangle_mixed_count(m, n, t, r - t);
                    let rhs = numbers::binomial(n as i64, t as i64)
                        * numbers::binomial(m as i64, r as i64)
                        * numbers::alternating_sum(n, r, t);
                    report.check(lhs == rhs, || {
                        format!(
                            "composition sum vs alternating sum at (m={m}, n={n}, r={r}, t={t}): {lhs} vs {rhs}"
                        )
                    });
                }
            }
        }
    }

    // the basic commutation relation X Y = Y X + nu Y + mu I recovered from
    // the rectangle counts at m = n = 1
    let ones = [BigInt::one(), BigInt::one()];
    for m in 1..=4usize {
        for n in 1..=4usize {
            let word = crate::words::parse_word(&format!("X^{m}Y^{n}")).unwrap();
            let oracle = normal_order(&word, ring)
                .specialize_q(&BigInt::one())
                .specialize_alphas(&ones)
                .unwrap();
            for r in 0..=m {
                for t in 0..=r.min(n) {
                    let count = rectangle_mixed_count(m, n, t, r - t);
                    let coeff = oracle
                        .coefficient(n - t, m - r)
                        .as_constant()
                        .expect("specialized coefficient is constant");
                    report.check(count == coeff, || {
                        format!(
                            "X^{m}Y^{n} coefficient of Y^{}X^{}: counts {count}, oracle {coeff}",
                            n - t,
                            m - r
                        )
                    });
                }
            }
        }
    }

    // X^m Y^n via alternating sums equals the oracle for m,n <= 6
    for m in 1..=6usize {
        for n in 1..=6usize {
            let word = crate::words::parse_word(&format!("X^{m}Y^{n}")).unwrap();
            let oracle = normal_order(&word, ring)
                .specialize_q(&BigInt::one())
                .specialize_alphas(&ones)
                .unwrap();
            let formula = basic_word_ore_formula(m, n);
            let diff = first_difference(&oracle, &formula).unwrap();
            report.check(diff.is_none(), || {
                format!("X^{m}Y^{n} alternating-sum formula: {}", diff.unwrap())
            });
        }
    }

    // named rectangular boards
    for check in named_board_report(6, 2) {
        report.check(check.agree(), || {
            format!("{}: values {:?}", check.description, check.values)
        });
    }

    // Eulerian comparison is informational: record the disagreements and
    // insist the documented one is visible
    let comparisons = eulerian_comparison_report(5, 5);
    let disagreements: Vec<_> = comparisons.iter().filter(|c| !c.agree()).collect();
    report.info.push(format!(
        "eulerian closed-form comparison: {} of {} indices disagree with the alternating sum (not a failure)",
        disagreements.len(),
        comparisons.len()
    ));
    if let Some(first) = disagreements.first() {
        report.info.push(format!(
            "e.g. (n={}, r={}, t={}): alternating {} vs eulerian {}",
            first.n, first.r, first.t, first.alternating, first.closed_form
        ));
    }
    let documented = comparisons
        .iter()
        .find(|c| c.n == 1 && c.r == 1 && c.t == 0)
        .unwrap();
    report.check(!documented.agree(), || {
        "the documented (n=1, r=1, t=0) discrepancy failed to appear".to_string()
    });

    report
}

/// Binomial theorems: the diagram-assembled `(X+Y)^m` equals the oracle
/// expansion; the quantum-plane specialization gives Gaussian binomials; the
/// coefficient-level assembly reproduces the same normal form.
pub fn suite_binomial(_config: &SuiteConfig) -> SuiteReport {
    let mut report = SuiteReport::new("binomial");
    for s in 0..=2usize {
        let ring = Ring::new(s);
        for m in 0..=7usize {
            let assembled = binomial_normal_form(ring, m);
            let mut expansion = MixedExpression::new(ring);
            for word in all_words_of_length(m) {
                expansion.add_word(word, &ring.one());
            }
            let oracle = normal_order_expression(&expansion);
            let diff = first_difference(&assembled, &oracle).unwrap();
            report.check(diff.is_none(), || {
                format!("(X+Y)^{m} at s={s}: {}", diff.unwrap())
            });
        }
    }

    let ring = Ring::new(1);
    for m in 0..=10usize {
        let quantum = binomial_normal_form(ring, m)
            .specialize_alphas(&[BigInt::zero(), BigInt::zero()])
            .unwrap();
        for k in 0..=m {
            let expected = ring.q_binomial(m as u32, k as u32).unwrap();
            let got = quantum.coefficient(m - k, k);
            report.check(got == expected, || {
                format!("quantum plane binom({m},{k})_q: got {got}, expected {expected}")
            });
        }
    }

    // assembling the O coefficients term by term gives the same normal form
    for m in 0..=5usize {
        let direct = binomial_normal_form(ring, m);
        let mut rebuilt = crate::rewriter::NormalForm::new(ring);
        for k in 0..=m {
            for ell in k..=m {
                for t in 0..=(ell - k) {
                    if m < ell + t {
                        continue;
                    }
                    let coeff = ore_binomial_coefficient(m, k, ell, t);
                    rebuilt.add_term(m - ell - t, k, &coeff);
                }
            }
        }
        let diff = first_difference(&direct, &rebuilt).unwrap();
        report.check(diff.is_none(), || {
            format!("coefficient assembly of (X+Y)^{m}: {}", diff.unwrap())
        });
    }
    report
}

/// Classical anchors at `q = 1`: Stirling, Lah and Scherk specializations,
/// the Ore-Stirling factorization, and the q-Lah recurrences.
pub fn suite_classical(_config: &SuiteConfig) -> SuiteReport {
    let mut report = SuiteReport::new("classical");
    let ring = Ring::new(1);
    let one = BigInt::one();

    // (YX)^n: S(n,k) under (1,0), |s(n,k)| under (0,1), n <= 7
    let s2 = stirling2_table(7);
    let s1 = stirling1_unsigned_table(7);
    for n in 0..=7usize {
        let word = Word::new([Letter::Y, Letter::X].repeat(n));
        let form = combinatorial_normal_form(ring, &word).specialize_q(&one);
        let weyl = form
            .specialize_alphas(&[BigInt::one(), BigInt::zero()])
            .unwrap();
        let shift = form
            .specialize_alphas(&[BigInt::zero(), BigInt::one()])
            .unwrap();
        for k in 0..=n {
            let got = weyl.coefficient(k, k).as_constant().unwrap();
            report.check(got == s2[n][k], || {
                format!(
                    "(YX)^{n} Weyl coefficient of Y^{k}X^{k}: got {got}, want S({n},{k})={}",
                    s2[n][k]
                )
            });
            let got = shift.coefficient(n, k).as_constant().unwrap();
            report.check(got == s1[n][k], || {
                format!(
                    "(YX)^{n} shift coefficient of Y^{n}X^{k}: got {got}, want |s({n},{k})|={}",
                    s1[n][k]
                )
            });
        }
    }

    // (Y^2 X)^n gives Lah numbers for n <= 6
    let lah = lah_table(6);
    for n in 0..=6usize {
        let word = Word::new([Letter::Y, Letter::Y, Letter::X].repeat(n));
        let form = combinatorial_normal_form(ring, &word)
            .specialize_q(&one)
            .specialize_alphas(&[BigInt::one(), BigInt::zero()])
            .unwrap();
        for k in 0..=n {
            let got = form.coefficient(n + k, k).as_constant().unwrap();
            report.check(got == lah[n][k], || {
                format!(
                    "(Y^2X)^{n} coefficient of Y^{}X^{k}: got {got}, want L({n},{k})={}",
                    n + k,
                    lah[n][k]
                )
            });
        }
    }

    // the q=1 factorization of the Ore-Stirling numbers, n <= 7
    for n in 0..=7usize {
        for j in 0..=n as i64 {
            for k in 0..=j {
                let specialized = ore_stirling(n, j, k).specialize_q(&one);
                let factored = ore_stirling_factorization(n, j, k);
                report.check(specialized == factored, || {
                    format!(
                        "factorization at (n={n}, j={j}, k={k}): placement {specialized}, product {factored}"
                    )
                });
            }
        }
    }

    // q-Lah recurrences from the Ore-Lah specializations, rows up to 6
    let weyl_alphas = [BigInt::one(), BigInt::zero()];
    let shift_alphas = [BigInt::zero(), BigInt::one()];
    let lah_q = |n: usize, k: i64| {
        ore_lah(n, n as i64 + k, k)
            .specialize_alphas(&weyl_alphas)
            .unwrap()
    };
    let lah_q_shift = |n: usize, k: i64| {
        ore_lah(n, 2 * n as i64, k)
            .specialize_alphas(&shift_alphas)
            .unwrap()
    };
    for n in 0..6usize {
        for k in 0..=(n as i64 + 1) {
            // L_q(n+1,k) = q^{n+k-1} L_q(n,k-1) + [n+k]_q L_q(n,k)
            let lhs = lah_q(n + 1, k);
            let mut rhs = ring.zero();
            let prev = lah_q(n, k - 1);
            if !prev.is_zero() {
                rhs = &rhs + &ring.q_pow((n as i64 + k - 1) as u32).mul(&prev);
            }
            let same = lah_q(n, k);
            if !same.is_zero() {
                rhs = &rhs + &ring.q_int((n as i64 + k) as u32).mul(&same);
            }
            report.check(lhs == rhs, || {
                format!(
                    "q-Lah recurrence at (n={}, k={k}): lhs={lhs}, rhs={rhs}",
                    n + 1
                )
            });

            // shift variant: L^s_q(n+1,k) = q^{2n} L^s_q(n,k-1) + [2n]_q L^s_q(n,k)
            let lhs = lah_q_shift(n + 1, k);
            let mut rhs = ring.zero();
            let prev = lah_q_shift(n, k - 1);
            if !prev.is_zero() {
                rhs = &rhs + &ring.q_pow(2 * n as u32).mul(&prev);
            }
            let same = lah_q_shift(n, k);
            if !same.is_zero() {
                rhs = &rhs + &ring.q_int(2 * n as u32).mul(&same);
            }
            report.check(lhs == rhs, || {
                format!(
                    "shift q-Lah recurrence at (n={}, k={k}): lhs={lhs}, rhs={rhs}",
                    n + 1
                )
            });
        }
    }

    // killing one contraction collapses the normal form to the pure rook
    // (file) expansion: the Weyl and shift slices, words up to length 8
    let zero_one = [BigInt::zero(), BigInt::one()];
    let one_zero = [BigInt::one(), BigInt::zero()];
    for len in 0..=8usize {
        for word in all_words_of_length(len) {
            let board = Board::from_word(&word);
            let m = word.count_x();
            let n = word.count_y();
            let form = combinatorial_normal_form(ring, &word);

            let weyl = form.specialize_alphas(&one_zero).unwrap();
            let mut expected = crate::rewriter::NormalForm::new(ring);
            for (k, poly) in crate::placements::rook_numbers(ring, &board, 0)
                .unwrap()
                .iter()
                .enumerate()
            {
                if k <= n && k <= m {
                    expected.add_term(n - k, m - k, &poly.specialize_alphas(&one_zero).unwrap());
                }
            }
            report.check(
                first_difference(&weyl, &expected).unwrap().is_none(),
                || format!("Weyl slice of {word} is not the rook expansion"),
            );

            let shift = form.specialize_alphas(&zero_one).unwrap();
            let mut expected = crate::rewriter::NormalForm::new(ring);
            for (ell, poly) in crate::placements::rook_numbers(ring, &board, 1)
                .unwrap()
                .iter()
                .enumerate()
            {
                if ell <= m {
                    expected.add_term(n, m - ell, &poly.specialize_alphas(&zero_one).unwrap());
                }
            }
            report.check(
                first_difference(&shift, &expected).unwrap().is_none(),
                || format!("shift slice of {word} is not the file expansion"),
            );
        }
    }

    // Scherk bridge: S^(r)_{1,0;1}(n; (r-1)n+k, k) = r_{n-k}(J_{n,r})
    for r in 1..=3usize {
        for n in 0..=6usize {
            let board = Board::jump(n, r);
            let counts =
                sequential_table(ring, &board, &PlacementType::cap_all(2, board.columns()))
                    .unwrap();
            for k in 0..=n {
                let specialized = ore_scherk(r, n, ((r - 1) * n + k) as i64, k as i64)
                    .specialize_q(&one)
                    .specialize_alphas(&weyl_alphas)
                    .unwrap()
                    .as_constant()
                    .unwrap();
                let enumerated = counts
                    .get(&PlacementType::rook_file(n - k, 0))
                    .map(count_at_ones)
                    .unwrap_or_else(BigInt::zero);
                report.check(specialized == enumerated, || {
                    format!(
                        "Scherk bridge (r={r}, n={n}, k={k}): specialization {specialized}, enumeration {enumerated}"
                    )
                });
            }
        }
    }
    report
}

/// Every suite in order. `verify --suite all` runs exactly this.
pub fn all_suites(config: &SuiteConfig) -> Vec<SuiteReport> {
    vec![
        suite_oracle(config),
        suite_engines(config),
        suite_recurrences(config),
        suite_closed_forms(config),
        suite_binomial(config),
        suite_classical(config),
    ]
}

pub fn suite_by_name(name: &str, config: &SuiteConfig) -> Option<Vec<SuiteReport>> {
    match name {
        "oracle" => Some(vec![suite_oracle(config)]),
        "engines" => Some(vec![suite_engines(config)]),
        "recurrences" => Some(vec![suite_recurrences(config)]),
        "closed-forms" => Some(vec![suite_closed_forms(config)]),
        "binomial" => Some(vec![suite_binomial(config)]),
        "classical" => Some(vec![suite_classical(config)]),
        "all" => Some(all_suites(config)),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // The full-bound suites run as the acceptance tests; these smoke checks
    // keep the library tests quick.
    fn small_config() -> SuiteConfig {
        SuiteConfig {
            max_len: 5,
            random_words: 10,
            random_len: 8,
            max_cells: 6,
            engine_word_len: 5,
            s_values: vec![0, 1, 2],
            seed: 7,
            main_recurrence_trials: 5,
        }
    }

    #[test]
    fn oracle_suite_small() {
        let report = suite_oracle(&small_config());
        assert!(report.passed(), "{}", report.summary());
    }

    #[test]
    fn engines_suite_small() {
        let report = suite_engines(&small_config());
        assert!(report.passed(), "{}", report.summary());
    }

    #[test]
    fn deterministic_given_seed() {
        let config = small_config();
        let a = suite_oracle(&config);
        let b = suite_oracle(&config);
        assert_eq!(a.cases, b.cases);
        assert_eq!(a.failures, b.failures);
    }

    #[test]
    fn unknown_suite_is_none() {
        assert!(suite_by_name("nope", &small_config()).is_none());
    }

    #[test]
    fn ferrers_board_generation_counts() {
        // 1 empty + partitions of 1..=6: 1+2+3+5+7+11 = 29, plus p(0)=... the
        // generator lists every partition with sum <= 6 exactly once
        let boards = ferrers_boards_up_to(6);
        assert_eq!(boards.len(), 1 + 1 + 2 + 3 + 5 + 7 + 11);
        assert!(boards.iter().all(|b| b.is_ferrers()));
        let unique: std::collections::HashSet<_> =
            boards.iter().map(|b| b.heights_rtl().to_vec()).collect();
        assert_eq!(unique.len(), boards.len());
    }
}
