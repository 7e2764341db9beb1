//! Doc-test harness for the book in `book/`.
//!
//! mdBook renders the chapters but cannot run their code blocks as tests,
//! so this crate includes each chapter as the documentation of an empty
//! module and lets `cargo test --doc` do the work. One module per chapter
//! keeps test failures attributable to the chapter they come from, and the
//! `include_str!` indirection means the book and these doc-tests are the
//! same bytes: a snippet cannot pass here and lie there.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/exact-arithmetic.md")]
pub mod exact_arithmetic {}

#[doc = include_str!("../../../book/src/difference-quotient.md")]
pub mod difference_quotient {}

#[doc = include_str!("../../../book/src/monotonicity.md")]
pub mod monotonicity {}

#[doc = include_str!("../../../book/src/cubics.md")]
pub mod cubics {}

#[doc = include_str!("../../../book/src/root-oracle.md")]
pub mod root_oracle {}

#[doc = include_str!("../../../book/src/command-line.md")]
pub mod command_line {}
