//! Words over the alphabet `{X, Y}`: parsing, block decomposition, and the
//! Young-diagram bijection used by the binomial expansion.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WordError {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("diagram violates its bounding box: {0}")]
    BoxBound(String),
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Letter {
    X,
    Y,
}

/// A finite word over `{X, Y}`, read left to right. The empty word is the
/// identity element.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Default)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn new(letters: Vec<Letter>) -> Word {
        Word { letters }
    }

    pub fn empty() -> Word {
        Word::default()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn count_x(&self) -> usize {
        self.letters.iter().filter(|&&l| l == Letter::X).count()
    }

    pub fn count_y(&self) -> usize {
        self.letters.iter().filter(|&&l| l == Letter::Y).count()
    }

    /// Concatenation, `self` on the left.
    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    /// Block decomposition `Y^{n_r} X^{m_r} ... Y^{n_1} X^{m_1}`.
    pub fn block_form(&self) -> BlockForm {
        let mut blocks = Vec::new();
        let mut i = 0;
        let letters = &self.letters;
        while i < letters.len() {
            let mut n = 0;
            while i < letters.len() && letters[i] == Letter::Y {
                n += 1;
                i += 1;
            }
            let mut m = 0;
            while i < letters.len() && letters[i] == Letter::X {
                m += 1;
                i += 1;
            }
            blocks.push((n, m));
        }
        BlockForm { blocks }
    }
}

/// Build `Y^n` or `X^m` runs conveniently.
pub fn run(letter: Letter, count: usize) -> Word {
    Word::new(vec![letter; count])
}

/// The block decomposition of a word. Blocks are stored left to right; with
/// the usual right-to-left numbering `j = r..1`, `blocks[0]` is block `r` and
/// the last entry is block `1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BlockForm {
    blocks: Vec<(usize, usize)>,
}

impl BlockForm {
    /// Blocks `(n_j, m_j)` left to right.
    pub fn blocks(&self) -> &[(usize, usize)] {
        &self.blocks
    }

    /// `|n|`, the total number of `Y` letters.
    pub fn total_y(&self) -> usize {
        self.blocks.iter().map(|&(n, _)| n).sum()
    }

    /// `|m|`, the total number of `X` letters.
    pub fn total_x(&self) -> usize {
        self.blocks.iter().map(|&(_, m)| m).sum()
    }

    /// `m_1`, the size of the rightmost `X` run. Zero when the word ends in
    /// `Y` (or is empty).
    pub fn m1(&self) -> usize {
        self.blocks.last().map(|&(_, m)| m).unwrap_or(0)
    }

    /// Concatenate the blocks back into a word.
    pub fn to_word(&self) -> Word {
        let mut letters = Vec::new();
        for &(n, m) in &self.blocks {
            letters.extend(std::iter::repeat_n(Letter::Y, n));
            letters.extend(std::iter::repeat_n(Letter::X, m));
        }
        Word::new(letters)
    }
}

/// Canonical rendering with maximal run-length compression: `XXYY` prints as
/// `X^2Y^2`. The empty word renders as the empty string.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut i = 0;
        while i < self.letters.len() {
            let letter = self.letters[i];
            let mut count = 0;
            while i < self.letters.len() && self.letters[i] == letter {
                count += 1;
                i += 1;
            }
            let symbol = match letter {
                Letter::X => 'X',
                Letter::Y => 'Y',
            };
            if count == 1 {
                write!(f, "{symbol}")?;
            } else {
                write!(f, "{symbol}^{count}")?;
            }
        }
        Ok(())
    }
}

/// Parse a word expression. Grammar:
///
/// ```text
/// word   := factor*
/// factor := atom ('^' uint)?
/// atom   := 'X' | 'Y' | '(' word ')'
/// ```
///
/// Whitespace is ignored; exponents must be at least 1. Zero factors (the
/// empty or all-whitespace input) give the empty word.
pub fn parse_word(text: &str) -> Result<Word, WordError> {
    let mut parser = WordParser {
        bytes: text.as_bytes(),
        pos: 0,
    };
    let word = parser.word()?;
    parser.skip_ws();
    if parser.pos != parser.bytes.len() {
        return Err(WordError::Syntax {
            offset: parser.pos,
            message: "unexpected character".into(),
        });
    }
    Ok(word)
}

struct WordParser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> WordParser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn word(&mut self) -> Result<Word, WordError> {
        let mut letters = Vec::new();
        while let Some(c) = self.peek() {
            let atom = match c {
                b'X' | b'x' => {
                    self.pos += 1;
                    Word::new(vec![Letter::X])
                }
                b'Y' | b'y' => {
                    self.pos += 1;
                    Word::new(vec![Letter::Y])
                }
                b'(' => {
                    self.pos += 1;
                    let inner = self.word()?;
                    if self.peek() != Some(b')') {
                        return Err(WordError::Syntax {
                            offset: self.pos,
                            message: "expected ')'".into(),
                        });
                    }
                    self.pos += 1;
                    inner
                }
                b')' => break,
                _ => {
                    return Err(WordError::Syntax {
                        offset: self.pos,
                        message: format!("expected 'X', 'Y' or '(', found {:?}", c as char),
                    })
                }
            };
            let count = if self.peek() == Some(b'^') {
                self.pos += 1;
                self.skip_ws();
                let start = self.pos;
                while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                if start == self.pos {
                    return Err(WordError::Syntax {
                        offset: self.pos,
                        message: "expected an exponent".into(),
                    });
                }
                let value: usize = std::str::from_utf8(&self.bytes[start..self.pos])
                    .unwrap()
                    .parse()
                    .map_err(|_| WordError::Syntax {
                        offset: start,
                        message: "exponent out of range".into(),
                    })?;
                if value == 0 {
                    return Err(WordError::Syntax {
                        offset: start,
                        message: "exponent 0 is not allowed".into(),
                    });
                }
                value
            } else {
                1
            };
            for _ in 0..count {
                letters.extend_from_slice(atom.letters());
            }
        }
        Ok(Word::new(letters))
    }
}

/// A Young diagram `lambda_1 >= ... >= lambda_l >= 0` (column heights, zeros
/// allowed) contained in an `(m - l) x l` box; `max_part` is the height bound
/// `m - l`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct YoungDiagram {
    parts: Vec<usize>,
    max_part: usize,
}

impl YoungDiagram {
    pub fn new(parts: Vec<usize>, max_part: usize) -> Result<YoungDiagram, WordError> {
        if let Some(&first) = parts.first() {
            if first > max_part {
                return Err(WordError::BoxBound(format!(
                    "part {first} exceeds box height {max_part}"
                )));
            }
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(WordError::BoxBound(
                "parts are not weakly decreasing".into(),
            ));
        }
        Ok(YoungDiagram { parts, max_part })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of columns `l` (the number of `X` letters of the word).
    pub fn ell(&self) -> usize {
        self.parts.len()
    }

    /// Height bound of the box, `m - l`.
    pub fn max_part(&self) -> usize {
        self.max_part
    }

    /// Length `m` of the corresponding word.
    pub fn word_length(&self) -> usize {
        self.parts.len() + self.max_part
    }

    /// `|lambda|`, the number of boxes.
    pub fn cell_count(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The word `Y^{m-l-lambda_1} X Y^{lambda_1-lambda_2} ... X Y^{lambda_l}`.
    /// Inverse of [`diagram_from_word`].
    pub fn to_word(&self) -> Word {
        let mut letters = Vec::with_capacity(self.word_length());
        let first = self.parts.first().copied().unwrap_or(0);
        letters.extend(std::iter::repeat_n(Letter::Y, self.max_part - first));
        for i in 0..self.parts.len() {
            letters.push(Letter::X);
            let next = self.parts.get(i + 1).copied().unwrap_or(0);
            letters.extend(std::iter::repeat_n(Letter::Y, self.parts[i] - next));
        }
        Word::new(letters)
    }
}

/// The diagram of a word: `lambda_i` is the number of `Y` letters strictly to
/// the right of the `i`-th `X`.
pub fn diagram_from_word(word: &Word) -> YoungDiagram {
    let mut parts = Vec::with_capacity(word.count_x());
    let mut ys_right = 0;
    for &letter in word.letters().iter().rev() {
        match letter {
            Letter::Y => ys_right += 1,
            Letter::X => parts.push(ys_right),
        }
    }
    parts.reverse();
    YoungDiagram {
        parts,
        max_part: word.count_y(),
    }
}

/// All diagrams contained in the `(m - ell) x ell` box; there are
/// `binomial(m, ell)` of them.
pub fn enumerate_diagrams(m: usize, ell: usize) -> Vec<YoungDiagram> {
    assert!(ell <= m, "need ell <= m");
    let max_part = m - ell;
    let mut out = Vec::new();
    let mut parts = vec![0usize; ell];
    fn rec(
        parts: &mut Vec<usize>,
        idx: usize,
        bound: usize,
        max_part: usize,
        out: &mut Vec<YoungDiagram>,
    ) {
        if idx == parts.len() {
            out.push(YoungDiagram {
                parts: parts.clone(),
                max_part,
            });
            return;
        }
        for v in 0..=bound {
            parts[idx] = v;
            rec(parts, idx + 1, v, max_part, out);
        }
    }
    rec(&mut parts, 0, max_part, max_part, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(text: &str) -> Word {
        parse_word(text).unwrap()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(w("(YX)^3").to_string(), "YXYXYX");
        assert_eq!(w("X^2YXYX^2Y").to_string(), "X^2YXYX^2Y");
        assert_eq!(w("X^2YXYX^2Y").letters().len(), 8);
        assert_eq!(w("((XY)^2)^2").to_string(), "XYXYXYXY");
        assert_eq!(w(""), Word::empty());
        assert_eq!(w("  "), Word::empty());
    }

    #[test]
    fn parse_errors_carry_offsets() {
        match parse_word("XY^0") {
            Err(WordError::Syntax { offset, .. }) => assert_eq!(offset, 3),
            other => panic!("expected syntax error, got {other:?}"),
        }
        match parse_word("XZ") {
            Err(WordError::Syntax { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("expected syntax error, got {other:?}"),
        }
        assert!(parse_word("(XY").is_err());
        assert!(parse_word("X^").is_err());
    }

    #[test]
    fn block_form_examples() {
        let bf = w("YXYXYX").block_form();
        assert_eq!(bf.blocks(), &[(1, 1), (1, 1), (1, 1)]);
        assert_eq!((bf.total_y(), bf.total_x()), (3, 3));

        let bf = w("XXYXYXXY").block_form();
        assert_eq!(bf.blocks(), &[(0, 2), (1, 1), (1, 2), (1, 0)]);
        assert_eq!((bf.total_y(), bf.total_x()), (3, 5));
        assert_eq!(bf.m1(), 0);

        let bf = Word::empty().block_form();
        assert_eq!(bf.blocks(), &[] as &[(usize, usize)]);
        assert_eq!((bf.total_y(), bf.total_x()), (0, 0));
    }

    #[test]
    fn diagram_to_word_examples() {
        let d = YoungDiagram::new(vec![1, 0], 1).unwrap(); // m=3, ell=2
        assert_eq!(d.to_word(), w("XYX"));
        let d = YoungDiagram::new(vec![0, 0], 1).unwrap();
        assert_eq!(d.to_word(), w("YXX"));
        let d = YoungDiagram::new(vec![], 2).unwrap(); // ell=0, m=2
        assert_eq!(d.to_word(), w("YY"));
        assert!(YoungDiagram::new(vec![2, 0], 1).is_err());
        assert!(YoungDiagram::new(vec![0, 1], 1).is_err());
    }

    #[test]
    fn enumerate_diagram_counts() {
        let ds = enumerate_diagrams(2, 1);
        let parts: Vec<_> = ds.iter().map(|d| d.parts().to_vec()).collect();
        assert_eq!(parts.len(), 2);
        assert!(parts.contains(&vec![0]) && parts.contains(&vec![1]));

        assert_eq!(enumerate_diagrams(3, 3).len(), 1);
        assert_eq!(enumerate_diagrams(3, 3)[0].parts(), &[0, 0, 0]);

        assert_eq!(enumerate_diagrams(4, 2).len(), 6);
    }

    #[test]
    fn diagram_word_bijection_up_to_length_10() {
        for m in 0..=10usize {
            let mut seen = std::collections::HashSet::new();
            let mut total = 0;
            for ell in 0..=m {
                for d in enumerate_diagrams(m, ell) {
                    let word = d.to_word();
                    assert_eq!(word.len(), m);
                    assert_eq!(word.count_x(), ell);
                    let back = diagram_from_word(&word);
                    assert_eq!(back.parts(), d.parts());
                    assert_eq!(back.max_part(), d.max_part());
                    assert!(seen.insert(word), "duplicate word for m={m}");
                    total += 1;
                }
            }
            assert_eq!(total, 1usize << m, "2^m words covered for m={m}");
        }
    }

    fn arb_word(max_len: usize) -> impl Strategy<Value = Word> {
        proptest::collection::vec(prop_oneof![Just(Letter::X), Just(Letter::Y)], 0..=max_len)
            .prop_map(Word::new)
    }

    proptest! {
        #[test]
        fn render_parse_round_trip(word in arb_word(24)) {
            let reparsed = parse_word(&word.to_string()).unwrap();
            prop_assert_eq!(reparsed, word);
        }

        #[test]
        fn block_form_reconstructs(word in arb_word(24)) {
            let bf = word.block_form();
            prop_assert_eq!(bf.to_word(), word.clone());
            prop_assert_eq!(bf.total_y(), word.count_y());
            prop_assert_eq!(bf.total_x(), word.count_x());
        }
    }
}
