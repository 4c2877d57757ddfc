//! Symbolic normal ordering by exhaustive rewriting.
//!
//! This is the reference oracle for the whole crate: it knows nothing about
//! boards or placements and works purely by applying
//! `XY -> q YX + alpha_0 + alpha_1 Y + ... + alpha_s Y^s` until every
//! surviving word has the shape `Y^j X^k`. Words produced along different
//! rewrite paths are merged immediately, so the intermediate state is a
//! linear combination of distinct words.

use std::collections::BTreeMap;
use std::fmt;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::coeffring::{CoeffError, CoeffPoly, Ring};
use crate::words::{Letter, Word};

/// A normal ordered expression `sum c_{j,k} Y^j X^k`, keyed by
/// `(y exponent, x exponent)`. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NormalForm {
    ring: Ring,
    terms: BTreeMap<(usize, usize), CoeffPoly>,
}

/// First mismatching term between two normal forms.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Difference {
    pub y: usize,
    pub x: usize,
    pub left: CoeffPoly,
    pub right: CoeffPoly,
}

impl fmt::Display for Difference {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "at Y^{} X^{}: left = {}, right = {}",
            self.y, self.x, self.left, self.right
        )
    }
}

impl NormalForm {
    pub fn new(ring: Ring) -> NormalForm {
        NormalForm {
            ring,
            terms: BTreeMap::new(),
        }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn add_term(&mut self, y: usize, x: usize, coeff: &CoeffPoly) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry((y, x)).or_insert_with(|| self.ring.zero());
        *entry = &*entry + coeff;
        if entry.is_zero() {
            self.terms.remove(&(y, x));
        }
    }

    /// Coefficient of `Y^y X^x`; zero when absent.
    pub fn coefficient(&self, y: usize, x: usize) -> CoeffPoly {
        self.terms
            .get(&(y, x))
            .cloned()
            .unwrap_or_else(|| self.ring.zero())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(usize, usize), &CoeffPoly)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Substitute an integer for `q` in every coefficient.
    pub fn specialize_q(&self, q_val: &num_bigint::BigInt) -> NormalForm {
        let mut out = NormalForm::new(self.ring);
        for (&(y, x), coeff) in &self.terms {
            out.add_term(y, x, &coeff.specialize_q(q_val));
        }
        out
    }

    /// Substitute integers for all alphas in every coefficient.
    pub fn specialize_alphas(&self, vals: &[num_bigint::BigInt]) -> Result<NormalForm, CoeffError> {
        let mut out = NormalForm::new(self.ring);
        for (&(y, x), coeff) in &self.terms {
            out.add_term(y, x, &coeff.specialize_alphas(vals)?);
        }
        Ok(out)
    }
}

/// Terms in descending `(y, x)` order, the way normal forms are written.
impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(y, x), coeff) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({coeff})")?;
            if y == 1 {
                write!(f, " Y")?;
            } else if y > 1 {
                write!(f, " Y^{y}")?;
            }
            if x == 1 {
                write!(f, " X")?;
            } else if x > 1 {
                write!(f, " X^{x}")?;
            }
        }
        Ok(())
    }
}

/// Exact comparison; `Ok(None)` means equal, `Ok(Some(d))` reports the first
/// differing `(y, x)` key in descending order.
pub fn first_difference(a: &NormalForm, b: &NormalForm) -> Result<Option<Difference>, CoeffError> {
    if a.ring != b.ring {
        return Err(CoeffError::RingMismatch {
            left: a.ring.s(),
            right: b.ring.s(),
        });
    }
    let keys: std::collections::BTreeSet<(usize, usize)> =
        a.terms.keys().chain(b.terms.keys()).copied().collect();
    for &(y, x) in keys.iter().rev() {
        let left = a.coefficient(y, x);
        let right = b.coefficient(y, x);
        if left != right {
            return Ok(Some(Difference { y, x, left, right }));
        }
    }
    Ok(None)
}

/// A finite linear combination of words with polynomial coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MixedExpression {
    ring: Ring,
    terms: BTreeMap<Word, CoeffPoly>,
}

impl MixedExpression {
    pub fn new(ring: Ring) -> MixedExpression {
        MixedExpression {
            ring,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_word(ring: Ring, word: Word) -> MixedExpression {
        let mut e = MixedExpression::new(ring);
        e.add_word(word, &ring.one());
        e
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn add_word(&mut self, word: Word, coeff: &CoeffPoly) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(word).or_insert_with(|| self.ring.zero());
        *entry = &*entry + coeff;
        if entry.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &CoeffPoly)> {
        self.terms.iter()
    }
}

/// Which `XY` occurrence to rewrite next. The result is
/// strategy-independent (confluence); the choice only matters for testing
/// exactly that.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RedexStrategy {
    Rightmost,
    Leftmost,
    Seeded(u64),
}

/// Normal order a single word under `XY - qYX = sum alpha_j Y^j` with the
/// ring's degree bound `s`, selecting the rightmost corner at every step.
pub fn normal_order(word: &Word, ring: Ring) -> NormalForm {
    normal_order_with_strategy(word, ring, RedexStrategy::Rightmost)
}

pub fn normal_order_with_strategy(word: &Word, ring: Ring, strategy: RedexStrategy) -> NormalForm {
    let expr = MixedExpression::from_word(ring, word.clone());
    normal_order_expression_with_strategy(&expr, strategy)
}

/// Normal order a linear combination of words; the result distributes over
/// the combination.
pub fn normal_order_expression(expr: &MixedExpression) -> NormalForm {
    normal_order_expression_with_strategy(expr, RedexStrategy::Rightmost)
}

pub fn normal_order_expression_with_strategy(
    expr: &MixedExpression,
    strategy: RedexStrategy,
) -> NormalForm {
    let ring = expr.ring();
    let mut rng = match strategy {
        RedexStrategy::Seeded(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        _ => None,
    };
    let mut done = NormalForm::new(ring);
    let mut pending: BTreeMap<Word, CoeffPoly> = BTreeMap::new();

    let push = |pending: &mut BTreeMap<Word, CoeffPoly>,
                done: &mut NormalForm,
                word: Word,
                coeff: &CoeffPoly| {
        if coeff.is_zero() {
            return;
        }
        if is_normal_ordered(&word) {
            done.add_term(word.count_y(), word.count_x(), coeff);
            return;
        }
        let entry = pending.entry(word).or_insert_with(|| ring.zero());
        *entry = &*entry + coeff;
    };

    for (word, coeff) in expr.terms() {
        push(&mut pending, &mut done, word.clone(), coeff);
    }

    while let Some((word, coeff)) = pending.pop_first() {
        if coeff.is_zero() {
            continue;
        }
        let redexes = redex_positions(&word);
        let pick = match strategy {
            RedexStrategy::Rightmost => *redexes.last().unwrap(),
            RedexStrategy::Leftmost => redexes[0],
            RedexStrategy::Seeded(_) => {
                let rng = rng.as_mut().unwrap();
                redexes[rng.gen_range(0..redexes.len())]
            }
        };
        for (new_word, factor) in rewrite_at(&word, pick, ring) {
            debug_assert!(
                measure(&new_word) < measure(&word),
                "rewrite step must decrease (x count, inversions)"
            );
            push(&mut pending, &mut done, new_word, &coeff.mul(&factor));
        }
    }
    done
}

/// No `X` immediately before a `Y` means no `X` anywhere before a `Y`, i.e.
/// the word is `Y^j X^k`.
fn is_normal_ordered(word: &Word) -> bool {
    word.letters()
        .windows(2)
        .all(|w| !(w[0] == Letter::X && w[1] == Letter::Y))
}

fn redex_positions(word: &Word) -> Vec<usize> {
    word.letters()
        .windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] == Letter::X && w[1] == Letter::Y)
        .map(|(i, _)| i)
        .collect()
}

/// Replace the `XY` at position `i` by each right-hand side of the relation:
/// `q YX` plus `alpha_j Y^j` for `j = 0..=s`.
fn rewrite_at(word: &Word, i: usize, ring: Ring) -> Vec<(Word, CoeffPoly)> {
    let letters = word.letters();
    debug_assert!(letters[i] == Letter::X && letters[i + 1] == Letter::Y);
    let mut out = Vec::with_capacity(ring.s() + 2);

    let mut swapped = letters.to_vec();
    swapped.swap(i, i + 1);
    out.push((Word::new(swapped), ring.q()));

    for j in 0..=ring.s() {
        let mut contracted = Vec::with_capacity(letters.len() + j - 2);
        contracted.extend_from_slice(&letters[..i]);
        contracted.extend(std::iter::repeat_n(Letter::Y, j));
        contracted.extend_from_slice(&letters[i + 2..]);
        out.push((Word::new(contracted), ring.alpha(j)));
    }
    out
}

/// Termination measure: lexicographic (number of X letters, number of
/// inversions, i.e. pairs X before Y). Every rewrite strictly decreases it.
fn measure(word: &Word) -> (usize, usize) {
    let mut inversions = 0;
    let mut ys_right = 0;
    for &l in word.letters().iter().rev() {
        match l {
            Letter::Y => ys_right += 1,
            Letter::X => inversions += ys_right,
        }
    }
    (word.count_x(), inversions)
}
