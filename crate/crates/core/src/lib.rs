//! Loopless generation of mixed-radix reflected Gray codes.
//!
//! Every generator implements [`GrayGenerator`]: it starts at the all-zero
//! word and each [`advance`](GrayGenerator::advance) changes one digit by
//! one. The families are
//!
//! - tower games for odd radixes ([`odd`]): `m` pegs in a row, or three pegs
//!   with dial disks for mixed odd radixes;
//! - tower games for even radixes ([`even`]): `m + 1` pegs in a cycle, with
//!   plain stacks or interval-encoded pegs;
//! - work-ahead buffering of the lexicographic odometer ([`workahead`]);
//! - the odometer reference in [`oracle`], which every other generator is
//!   checked against by [`harness`].
//!
//! ```
//! use loopless_gray::{collect_words, odd_generator};
//!
//! let words: Vec<String> = collect_words(odd_generator(3, 2).unwrap())
//!     .unwrap()
//!     .iter()
//!     .map(|w| w.to_string())
//!     .collect();
//! assert_eq!(words[..4], ["00", "01", "02", "12"]);
//! ```

pub mod algorithm;
pub mod cli;
pub mod error;
pub mod even;
pub mod generator;
pub mod harness;
pub mod odd;
pub mod oracle;
pub mod pegboard;
pub mod word;
pub mod workahead;

pub use algorithm::{Algorithm, BoxedGenerator};
pub use error::{GrayError, Result};
pub use even::{even_generator, even_intervals_generator, hanoi_generator, EvenIntervals, EvenTowers};
pub use generator::{collect_deltas, collect_words, GrayGenerator, OpCounter, OpKind, Words};
pub use odd::{bucharest_generator, odd_compressed_generator, odd_generator, OddCompressed, OddTowers};
pub use oracle::{delta_sequence, reflected_sequence, ruler, ruler_bar, step_sum, Reflected, StepSum};
pub use pegboard::{DialDisk, IntervalPegState, PegState};
pub use word::{apply_delta, render, DeltaEvent, Direction, GrayWord, RadixVector};
pub use workahead::{
    work_ahead_binary_generator, work_ahead_generator, work_ahead_prime_generator, Variant, WorkAhead,
};
