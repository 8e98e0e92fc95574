//! Work-ahead generators.
//!
//! A producer runs the lexicographic odometer one loop iteration at a time
//! and appends each delta position it finds to a bounded FIFO buffer. The
//! consumer performs two producer steps per visited word, then removes one
//! position from the buffer and moves that digit. The producer needs fewer
//! than two iterations per position on average, so the buffer never runs
//! dry and every advance does a fixed amount of work.
//!
//! Three variants:
//! - [`Variant::Standard`]: capacity `ceil(n/2)`, an extra odometer digit of
//!   radix 2 so that the position `n + 1` can be produced and consumed as the
//!   end marker.
//! - [`Variant::Binary`]: all radixes 2, capacity `max(ceil((n+1)/2), 2)` and
//!   no capacity test; overflowing the buffer is reported as a contract
//!   violation.
//! - [`Variant::StepPrime`]: the producer itself signals the end when its
//!   cursor reaches `n + 1`; no extra digit, capacity exactly `ceil(n/2)`.

use std::collections::VecDeque;

use crate::error::{GrayError, Result};
use crate::generator::{GrayGenerator, OpCounter, OpKind};
use crate::word::{DeltaEvent, Direction, GrayWord, RadixVector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    Standard,
    Binary,
    StepPrime,
}

/// What one producer step did.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepOutcome {
    /// A digit at its maximum was reset; the cursor moved up.
    Carried,
    /// A digit was incremented and its position appended.
    Appended(usize),
    /// The buffer was full; nothing changed.
    Full,
    /// The cursor passed the last digit (step-prime variant only).
    Terminate,
}

/// Record of buffer traffic over a run.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BufferTrace {
    /// Every value appended, in order.
    pub appended: Vec<usize>,
    /// Per consumption: occupancy just before the removal, value removed.
    pub consumed: Vec<(usize, usize)>,
}

#[derive(Debug, Clone)]
pub struct WorkAhead {
    variant: Variant,
    radixes: RadixVector,
    word: GrayWord,
    directions: Vec<Direction>,
    /// Odometer digits, `lex[0]` is `b_1`.
    lex: Vec<u32>,
    cursor: usize,
    queue: VecDeque<usize>,
    capacity: usize,
    max_occupancy: usize,
    remaining_at_termination: Option<usize>,
    trace: Option<BufferTrace>,
    ops: OpCounter,
    finished: bool,
}

/// Work-ahead generator for any radix vector with `n >= 1`.
pub fn work_ahead_generator(radixes: RadixVector) -> Result<WorkAhead> {
    WorkAhead::new(Variant::Standard, radixes)
}

/// Binary work-ahead generator without the capacity test.
pub fn work_ahead_binary_generator(n: usize) -> Result<WorkAhead> {
    WorkAhead::new(Variant::Binary, RadixVector::uniform(2, n)?)
}

/// Work-ahead generator whose producer detects the end.
pub fn work_ahead_prime_generator(radixes: RadixVector) -> Result<WorkAhead> {
    WorkAhead::new(Variant::StepPrime, radixes)
}

/// `ceil(n/2)`.
pub fn buffer_capacity(n: usize) -> usize {
    n.div_ceil(2)
}

/// `max(ceil((n+1)/2), 2)`.
pub fn binary_buffer_capacity(n: usize) -> usize {
    (n + 1).div_ceil(2).max(2)
}

impl WorkAhead {
    pub fn new(variant: Variant, radixes: RadixVector) -> Result<Self> {
        let name = variant_name(variant);
        let n = radixes.len();
        if n == 0 {
            return Err(GrayError::EmptyWord { algorithm: name });
        }
        if variant == Variant::Binary && radixes.as_slice().iter().any(|&m| m != 2) {
            return Err(GrayError::FixedRadixRequired {
                algorithm: name,
                radix: 2,
            });
        }
        let (capacity, lex_len) = match variant {
            // two spare digits: b_{n+1} is the end marker, b_{n+2} absorbs
            // any overrun of the delayed termination
            Variant::Standard => (buffer_capacity(n), n + 2),
            Variant::Binary => (binary_buffer_capacity(n), n + 2),
            Variant::StepPrime => (buffer_capacity(n), n),
        };
        Ok(Self {
            variant,
            word: GrayWord::zeros(n),
            directions: vec![Direction::Up; n],
            lex: vec![0; lex_len],
            cursor: 1,
            queue: VecDeque::with_capacity(capacity),
            capacity,
            max_occupancy: 0,
            remaining_at_termination: None,
            trace: None,
            radixes,
            ops: OpCounter::new(),
            finished: false,
        })
    }

    /// Records buffer traffic from now on.
    pub fn with_trace(mut self) -> Self {
        self.trace = Some(BufferTrace::default());
        self
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    pub fn occupancy(&self) -> usize {
        self.queue.len()
    }

    pub fn max_occupancy(&self) -> usize {
        self.max_occupancy
    }

    pub fn queue(&self) -> impl Iterator<Item = usize> + '_ {
        self.queue.iter().copied()
    }

    /// Producer cursor `j`.
    pub fn cursor(&self) -> usize {
        self.cursor
    }

    /// Odometer digit `b_i`, 1-based.
    pub fn lex_digit(&self, i: usize) -> u32 {
        self.lex[i - 1]
    }

    /// Buffer occupancy when the step-prime producer signalled the end.
    pub fn remaining_at_termination(&self) -> Option<usize> {
        self.remaining_at_termination
    }

    pub fn trace(&self) -> Option<&BufferTrace> {
        self.trace.as_ref()
    }

    fn lex_radix(&self, j: usize) -> u32 {
        if j <= self.radixes.len() {
            self.radixes.radix(j)
        } else {
            2
        }
    }

    fn append(&mut self, j: usize) -> Result<()> {
        if self.queue.len() >= self.capacity {
            return Err(GrayError::ContractViolation(format!(
                "buffer overflow: {} entries at capacity {}",
                self.queue.len(),
                self.capacity
            )));
        }
        self.queue.push_back(j);
        self.ops.tick(OpKind::QueueOp);
        self.max_occupancy = self.max_occupancy.max(self.queue.len());
        if let Some(t) = self.trace.as_mut() {
            t.appended.push(j);
        }
        Ok(())
    }

    /// One iteration of the producer loop.
    pub fn step(&mut self) -> Result<StepOutcome> {
        self.ops.tick(OpKind::LoopIteration);
        let n = self.radixes.len();
        let j = self.cursor;
        if self.variant == Variant::StepPrime && j == n + 1 {
            return Ok(StepOutcome::Terminate);
        }
        let b = *self.lex.get(j - 1).ok_or_else(|| {
            GrayError::ContractViolation(format!("producer cursor {j} past the odometer"))
        })?;
        if b + 1 == self.lex_radix(j) {
            self.lex[j - 1] = 0;
            self.cursor += 1;
            return Ok(StepOutcome::Carried);
        }
        if self.variant != Variant::Binary && self.queue.len() >= self.capacity {
            return Ok(StepOutcome::Full);
        }
        self.append(j)?;
        self.lex[j - 1] += 1;
        self.cursor = 1;
        Ok(StepOutcome::Appended(j))
    }

    fn consume(&mut self) -> Result<Option<DeltaEvent>> {
        if self.finished {
            return Ok(None);
        }
        for _ in 0..2 {
            if self.step()? == StepOutcome::Terminate {
                self.remaining_at_termination = Some(self.queue.len());
                self.finished = true;
                return Ok(None);
            }
        }
        let occupancy = self.queue.len();
        let j = self
            .queue
            .pop_front()
            .ok_or_else(|| GrayError::ContractViolation("buffer empty at consumption".into()))?;
        self.ops.tick(OpKind::QueueOp);
        if let Some(t) = self.trace.as_mut() {
            t.consumed.push((occupancy, j));
        }
        let n = self.radixes.len();
        if j == n + 1 {
            self.finished = true;
            return Ok(None);
        }
        let event = match self.variant {
            Variant::Binary => {
                let dir = if self.word.digit(j) == 0 {
                    Direction::Up
                } else {
                    Direction::Down
                };
                DeltaEvent::new(j, dir)
            }
            _ => DeltaEvent::new(j, self.directions[j - 1]),
        };
        self.word.apply(event, &self.radixes)?;
        let a = self.word.digit(j);
        if a == 0 || a + 1 == self.radixes.radix(j) {
            self.directions[j - 1] = self.directions[j - 1].reversed();
        }
        self.ops.tick(OpKind::DigitUpdate);
        Ok(Some(event))
    }
}

fn variant_name(variant: Variant) -> &'static str {
    match variant {
        Variant::Standard => "work-ahead",
        Variant::Binary => "work-ahead-binary",
        Variant::StepPrime => "work-ahead-x",
    }
}

impl GrayGenerator for WorkAhead {
    fn name(&self) -> &'static str {
        variant_name(self.variant)
    }

    fn radixes(&self) -> &RadixVector {
        &self.radixes
    }

    fn current(&self) -> &GrayWord {
        &self.word
    }

    fn advance(&mut self) -> Result<Option<DeltaEvent>> {
        let r = self.consume();
        self.ops.end_advance();
        r
    }

    fn ops(&self) -> &OpCounter {
        &self.ops
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generator::collect_words;
    use crate::oracle::reflected_sequence;

    fn mixed() -> RadixVector {
        RadixVector::new(vec![2, 4, 5, 2]).unwrap()
    }

    fn rendered<G: GrayGenerator>(g: G) -> Vec<String> {
        collect_words(g)
            .unwrap()
            .iter()
            .map(|w| w.render().unwrap())
            .collect()
    }

    #[test]
    fn capacities() {
        assert_eq!(buffer_capacity(4), 2);
        assert_eq!(buffer_capacity(5), 3);
        assert_eq!(binary_buffer_capacity(4), 3);
        assert_eq!(binary_buffer_capacity(1), 2);
        assert_eq!(binary_buffer_capacity(2), 2);
        assert_eq!(work_ahead_generator(mixed()).unwrap().capacity(), 2);
    }

    #[test]
    fn first_step_appends_one() {
        let mut g = work_ahead_generator(mixed()).unwrap();
        assert_eq!(g.step().unwrap(), StepOutcome::Appended(1));
        assert_eq!(g.lex_digit(1), 1);
        assert_eq!(g.cursor(), 1);
        assert_eq!(g.queue().collect::<Vec<_>>(), vec![1]);
        // m_1 = 2, so b_1 = 1 carries
        assert_eq!(g.step().unwrap(), StepOutcome::Carried);
        assert_eq!(g.lex_digit(1), 0);
        assert_eq!(g.cursor(), 2);
        assert_eq!(g.occupancy(), 1);
    }

    #[test]
    fn full_buffer_is_a_no_op() {
        let mut g = work_ahead_generator(RadixVector::uniform(5, 2).unwrap()).unwrap();
        assert_eq!(g.capacity(), 1);
        assert_eq!(g.step().unwrap(), StepOutcome::Appended(1));
        let (b1, cursor) = (g.lex_digit(1), g.cursor());
        assert_eq!(g.step().unwrap(), StepOutcome::Full);
        assert_eq!((g.lex_digit(1), g.cursor(), g.occupancy()), (b1, cursor, 1));
    }

    #[test]
    fn variants_match_oracle() {
        let expected = rendered(reflected_sequence(mixed()));
        assert_eq!(expected.len(), 80);
        assert_eq!(rendered(work_ahead_generator(mixed()).unwrap()), expected);
        assert_eq!(rendered(work_ahead_prime_generator(mixed()).unwrap()), expected);
        assert_eq!(
            rendered(work_ahead_binary_generator(4).unwrap()),
            rendered(reflected_sequence(RadixVector::uniform(2, 4).unwrap()))
        );
        assert_eq!(
            rendered(work_ahead_prime_generator(RadixVector::new(vec![3]).unwrap()).unwrap()),
            vec!["0", "1", "2"]
        );
    }

    #[test]
    fn rejects_empty_and_non_binary() {
        assert!(matches!(
            work_ahead_generator(RadixVector::new(vec![]).unwrap()),
            Err(GrayError::EmptyWord { .. })
        ));
        assert!(work_ahead_binary_generator(0).is_err());
        assert!(WorkAhead::new(Variant::Binary, mixed()).is_err());
    }

    #[test]
    fn prime_leaves_nothing_behind() {
        let mut g = work_ahead_prime_generator(mixed()).unwrap();
        while g.advance().unwrap().is_some() {}
        assert_eq!(g.remaining_at_termination(), Some(0));
    }

    #[test]
    fn buffer_never_empty_and_bounded() {
        let mut g = work_ahead_generator(mixed()).unwrap().with_trace();
        while g.advance().unwrap().is_some() {}
        let t = g.trace().unwrap();
        assert!(t.consumed.iter().all(|&(occ, _)| occ >= 1));
        assert!(g.max_occupancy() <= g.capacity());
        assert_eq!(t.consumed.last().unwrap().1, 5);
    }

    #[test]
    fn consumer_work_is_fixed() {
        let mut g = work_ahead_generator(mixed()).unwrap();
        while g.advance().unwrap().is_some() {}
        assert_eq!(g.ops().total_of(OpKind::LoopIteration), 2 * g.ops().advances());
    }
}
