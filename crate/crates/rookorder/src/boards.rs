//! Ferrers boards: construction from words, the named board families, and
//! rendering.
//!
//! Column heights are indexed right to left: `heights[0]` is the rightmost
//! column, matching the order in which normal ordering consumes corners. A
//! board is a Ferrers board when the heights are weakly increasing in that
//! order (weakly decreasing left to right). Columns are top-justified: a
//! column of height `h` occupies rows `1..=h` counted from the top, so a row
//! present in some column is present in every column to its left.

use crate::words::{Letter, Word};

/// A board given by its column heights, rightmost column first.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Board {
    heights: Vec<usize>,
}

/// What to draw in one cell of a board rendering.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CellGlyph {
    Empty,
    Cancelled,
    Rook(usize),
    File,
}

impl Board {
    /// Build from right-to-left column heights.
    pub fn from_heights_rtl(heights: Vec<usize>) -> Board {
        Board { heights }
    }

    /// Build from an explicit partition written left to right (the usual way
    /// partitions are quoted), e.g. `[3, 1]` for columns of heights 3 and 1.
    pub fn from_partition(parts_ltr: &[usize]) -> Board {
        let mut heights: Vec<usize> = parts_ltr.to_vec();
        heights.reverse();
        Board { heights }
    }

    /// The board outlined by the lattice path of a word (`X` = step right,
    /// `Y` = step up): one column per `X`, of height equal to the number of
    /// `Y` letters strictly to its right.
    pub fn from_word(word: &Word) -> Board {
        let mut heights = Vec::with_capacity(word.count_x());
        let mut ys_right = 0;
        for &letter in word.letters().iter().rev() {
            match letter {
                Letter::Y => ys_right += 1,
                Letter::X => heights.push(ys_right),
            }
        }
        Board { heights }
    }

    /// The staircase board `J_n` with heights `(n-1, ..., 1, 0)`.
    pub fn staircase(n: usize) -> Board {
        Board::jump(n, 1)
    }

    /// The m-jump board `J_{n,m}` with heights `(m(n-1), ..., m, 0)`.
    pub fn jump(n: usize, m: usize) -> Board {
        Board {
            heights: (0..n).map(|i| m * i).collect(),
        }
    }

    /// The Lah board `L_n = J_{n,2}`, outlined by `(Y^2 X)^n`.
    pub fn lah(n: usize) -> Board {
        Board::jump(n, 2)
    }

    /// The rectangle board `R_{m,n}`: `m` columns of height `n`, outlined by
    /// `X^m Y^n`.
    pub fn rectangle(m: usize, n: usize) -> Board {
        Board {
            heights: vec![n; m],
        }
    }

    /// Adjoin a new leftmost column of height `h`.
    pub fn adjoin_column(&self, h: usize) -> Board {
        let mut heights = self.heights.clone();
        heights.push(h);
        Board { heights }
    }

    /// Drop the leftmost column; the empty board stays empty.
    pub fn drop_leftmost_column(&self) -> Board {
        let mut heights = self.heights.clone();
        heights.pop();
        Board { heights }
    }

    /// Right-to-left column heights.
    pub fn heights_rtl(&self) -> &[usize] {
        &self.heights
    }

    pub fn columns(&self) -> usize {
        self.heights.len()
    }

    /// Height of the column with the given right-to-left index.
    pub fn height(&self, col_rtl: usize) -> usize {
        self.heights[col_rtl]
    }

    pub fn max_height(&self) -> usize {
        self.heights.iter().copied().max().unwrap_or(0)
    }

    /// `|B|`, the number of boxes.
    pub fn cell_count(&self) -> usize {
        self.heights.iter().sum()
    }

    /// Weakly increasing right to left.
    pub fn is_ferrers(&self) -> bool {
        self.heights.windows(2).all(|w| w[0] <= w[1])
    }

    /// The cell at right-to-left column `col`, row `row` (1-based from the
    /// top) is inside the board.
    pub fn contains_cell(&self, col_rtl: usize, row: usize) -> bool {
        col_rtl < self.heights.len() && row >= 1 && row <= self.heights[col_rtl]
    }

    /// ASCII rendering, rows top-down and left-justified. `glyph` supplies
    /// the content of each cell by `(right-to-left column, row from top)`.
    pub fn render_with(&self, glyph: impl Fn(usize, usize) -> CellGlyph) -> String {
        let max_h = self.max_height();
        let mut out = String::new();
        for row in 1..=max_h {
            let mut line = String::new();
            for col_ltr in 0..self.heights.len() {
                let col = self.heights.len() - 1 - col_ltr;
                if !self.contains_cell(col, row) {
                    break; // heights decrease left to right in renderable boards
                }
                if !line.is_empty() {
                    line.push(' ');
                }
                let cell = match glyph(col, row) {
                    CellGlyph::Empty => ". ".to_string(),
                    CellGlyph::Cancelled => "x ".to_string(),
                    CellGlyph::Rook(w) => format!("R{w}"),
                    CellGlyph::File => "R1".to_string(),
                };
                line.push_str(&cell);
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }

    pub fn render_plain(&self) -> String {
        self.render_with(|_, _| CellGlyph::Empty)
    }

    /// JSON form `{"heights":[...]}` with right-to-left heights.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "heights": self.heights })
    }
}
