//! The streaming generator contract shared by every algorithm, and the
//! elementary-operation counter used to audit per-step cost.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::word::{DeltaEvent, GrayWord, RadixVector};

/// Categories of elementary actions counted by [`OpCounter`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OpKind {
    /// Inspecting one peg while searching for a disk.
    PegScan,
    /// Popping or pushing one disk on a plain peg stack.
    DiskMove,
    /// One edit of an interval stack or position table.
    IntervalEdit,
    /// One append or removal on the work-ahead buffer.
    QueueOp,
    /// One digit or direction update.
    DigitUpdate,
    /// One iteration of a loop body (odometer carry, production step).
    LoopIteration,
}

impl OpKind {
    pub const ALL: [OpKind; 6] = [
        OpKind::PegScan,
        OpKind::DiskMove,
        OpKind::IntervalEdit,
        OpKind::QueueOp,
        OpKind::DigitUpdate,
        OpKind::LoopIteration,
    ];

    fn index(self) -> usize {
        self as usize
    }
}

/// Per-advance elementary-operation counts with running max and mean.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct OpCounter {
    current: [u64; 6],
    totals: [u64; 6],
    advances: u64,
    max_per_advance: u64,
    total: u64,
}

impl OpCounter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn tick(&mut self, kind: OpKind) {
        self.current[kind.index()] += 1;
    }

    pub fn tick_n(&mut self, kind: OpKind, n: u64) {
        self.current[kind.index()] += n;
    }

    /// Folds the counts of the advance in progress into the aggregates.
    pub fn end_advance(&mut self) {
        let sum: u64 = self.current.iter().sum();
        for (t, c) in self.totals.iter_mut().zip(self.current.iter_mut()) {
            *t += *c;
            *c = 0;
        }
        self.advances += 1;
        self.total += sum;
        self.max_per_advance = self.max_per_advance.max(sum);
    }

    pub fn reset(&mut self) {
        *self = Self::default();
    }

    pub fn advances(&self) -> u64 {
        self.advances
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn max_per_advance(&self) -> u64 {
        self.max_per_advance
    }

    pub fn mean_per_advance(&self) -> f64 {
        if self.advances == 0 {
            0.0
        } else {
            self.total as f64 / self.advances as f64
        }
    }

    /// Total count of one category over all completed advances.
    pub fn total_of(&self, kind: OpKind) -> u64 {
        self.totals[kind.index()]
    }
}

/// A pull-based generator of a mixed-radix Gray code.
///
/// The first current word is all zeros. Every successful [`advance`]
/// changes exactly one digit by one and returns the transition; after
/// `N - 1` transitions (`N` the number of words) it returns `Ok(None)` and
/// keeps returning it.
///
/// [`advance`]: GrayGenerator::advance
pub trait GrayGenerator {
    /// Short identifier, as accepted by the command line.
    fn name(&self) -> &'static str;

    fn radixes(&self) -> &RadixVector;

    fn current(&self) -> &GrayWord;

    /// Moves to the next word. `Err` means the generator broke one of its
    /// own invariants.
    fn advance(&mut self) -> Result<Option<DeltaEvent>>;

    fn ops(&self) -> &OpCounter;

    /// Peg contents in the board dump format, for tower-based generators.
    fn peg_dump(&self) -> Option<String> {
        None
    }

    /// Disk ids on each peg, bottom first, for tower-based generators.
    fn tower_snapshot(&self) -> Option<Vec<Vec<usize>>> {
        None
    }
}

impl<G: GrayGenerator + ?Sized> GrayGenerator for Box<G> {
    fn name(&self) -> &'static str {
        (**self).name()
    }
    fn radixes(&self) -> &RadixVector {
        (**self).radixes()
    }
    fn current(&self) -> &GrayWord {
        (**self).current()
    }
    fn advance(&mut self) -> Result<Option<DeltaEvent>> {
        (**self).advance()
    }
    fn ops(&self) -> &OpCounter {
        (**self).ops()
    }
    fn peg_dump(&self) -> Option<String> {
        (**self).peg_dump()
    }
    fn tower_snapshot(&self) -> Option<Vec<Vec<usize>>> {
        (**self).tower_snapshot()
    }
}

/// Iterator over every word of a generator, starting with the current one.
pub struct Words<G> {
    generator: G,
    started: bool,
    done: bool,
}

impl<G: GrayGenerator> Words<G> {
    pub fn new(generator: G) -> Self {
        Self {
            generator,
            started: false,
            done: false,
        }
    }

    pub fn into_inner(self) -> G {
        self.generator
    }
}

impl<G: GrayGenerator> Iterator for Words<G> {
    type Item = Result<GrayWord>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(Ok(self.generator.current().clone()));
        }
        match self.generator.advance() {
            Ok(Some(_)) => Some(Ok(self.generator.current().clone())),
            Ok(None) => {
                self.done = true;
                None
            }
            Err(e) => {
                self.done = true;
                Some(Err(e))
            }
        }
    }
}

/// Runs `generator` to the end and collects all of its words.
pub fn collect_words<G: GrayGenerator>(generator: G) -> Result<Vec<GrayWord>> {
    Words::new(generator).collect()
}

/// Runs `generator` to the end and collects the transitions.
pub fn collect_deltas<G: GrayGenerator>(mut generator: G) -> Result<Vec<DeltaEvent>> {
    let mut out = Vec::new();
    while let Some(e) = generator.advance()? {
        out.push(e);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counter_aggregates() {
        let mut c = OpCounter::new();
        c.tick(OpKind::DiskMove);
        c.tick(OpKind::DiskMove);
        c.end_advance();
        c.tick_n(OpKind::PegScan, 5);
        c.end_advance();
        assert_eq!(c.advances(), 2);
        assert_eq!(c.max_per_advance(), 5);
        assert_eq!(c.total(), 7);
        assert_eq!(c.total_of(OpKind::DiskMove), 2);
        assert!((c.mean_per_advance() - 3.5).abs() < 1e-12);
        c.reset();
        assert_eq!(c, OpCounter::new());
        assert_eq!(c.mean_per_advance(), 0.0);
    }
}
