//! Normal ordering for words in two letters `X`, `Y` subject to the
//! commutation relation `XY - qYX = f(Y)` with `f(Y) = a0 + a1 Y + ... + as Y^s`,
//! together with the rook-theoretic machinery that computes the same
//! coefficients combinatorially.
//!
//! The crate has two independent routes to the normal ordered form of a word:
//!
//! * [`rewriter`]: a symbolic engine that applies the relation exhaustively,
//!   used as the reference oracle;
//! * [`placements`] + [`numbers`]: weighted placements of rooks (with row
//!   creation) on the Ferrers board of the word, with three mutually checking
//!   engines: geometric enumeration, a sequential column walk, and a
//!   column-peeling recurrence.
//!
//! On top of these sit the classical number families (Stirling, Lah, Scherk
//! and their q-deformed Ore/polynomial generalizations), closed-form checks
//! for rectangle boards, and the normal ordered binomial `(X+Y)^m`.

// index variables here are the mathematical ones (n, j, k); iterator
// rewrites would obscure the formulas
#![allow(clippy::needless_range_loop)]

pub mod boards;
pub mod cli;
pub mod coeffring;
pub mod numbers;
pub mod placements;
pub mod rewriter;
pub mod suites;
pub mod words;
