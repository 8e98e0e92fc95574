//! Tower generators for even radixes.
//!
//! `m + 1` pegs stand in a cycle. Odd-numbered disks only move clockwise,
//! even-numbered ones only counterclockwise. `D_1` makes `m - 1` clockwise
//! steps, then the smallest top disk not covered by `D_1` moves once. The
//! digit of a disk changes whenever it moves, bouncing between 0 and `m - 1`;
//! the peg of a disk says nothing about its digit.
//!
//! With `m = 2` this is the classic loopless Tower of Hanoi.

use crate::error::{GrayError, Result};
use crate::generator::{GrayGenerator, OpCounter, OpKind};
use crate::pegboard::{IntervalPegState, PegState};
use crate::word::{DeltaEvent, Direction, GrayWord, RadixVector};

fn check_even(m: u32, algorithm: &'static str) -> Result<()> {
    if !m.is_multiple_of(2) {
        return Err(GrayError::EvenRadixRequired {
            algorithm,
            position: 1,
            radix: m,
        });
    }
    Ok(())
}

/// Peg reached by `disk` from `peg` on a cycle of `pegs` pegs.
fn cyclic_target(disk: usize, peg: usize, pegs: usize) -> usize {
    if disk % 2 == 1 {
        (peg + 1) % pegs
    } else {
        (peg + pegs - 1) % pegs
    }
}

/// Digit bookkeeping shared by both board encodings.
#[derive(Debug, Clone)]
struct Digits {
    radixes: RadixVector,
    word: GrayWord,
    directions: Vec<Direction>,
}

impl Digits {
    fn new(m: u32, n: usize) -> Result<Self> {
        Ok(Self {
            radixes: RadixVector::uniform(m, n)?,
            word: GrayWord::zeros(n),
            directions: vec![Direction::Up; n],
        })
    }

    fn bump(&mut self, disk: usize) -> Result<DeltaEvent> {
        let dir = self.directions[disk - 1];
        let event = DeltaEvent::new(disk, dir);
        self.word.apply(event, &self.radixes)?;
        let a = self.word.digit(disk);
        if a + 1 == self.radixes.radix(disk) {
            self.directions[disk - 1] = Direction::Down;
        } else if a == 0 {
            self.directions[disk - 1] = Direction::Up;
        }
        Ok(event)
    }
}

/// Algorithm EVEN on plain peg stacks. Finding the next disk scans all
/// `m + 1` pegs.
#[derive(Debug, Clone)]
pub struct EvenTowers {
    name: &'static str,
    m: u32,
    digits: Digits,
    pegs: PegState,
    peg_disk1: usize,
    sweep_left: u32,
    ops: OpCounter,
    finished: bool,
}

/// Algorithm EVEN for even `m >= 2`.
pub fn even_generator(m: u32, n: usize) -> Result<EvenTowers> {
    EvenTowers::new("even", m, n)
}

/// Binary reflected code from the loopless Tower of Hanoi.
pub fn hanoi_generator(n: usize) -> EvenTowers {
    EvenTowers::new("hanoi", 2, n).expect("radix 2 is even")
}

impl EvenTowers {
    fn new(name: &'static str, m: u32, n: usize) -> Result<Self> {
        check_even(m, "even")?;
        Ok(Self {
            name,
            m,
            digits: Digits::new(m, n)?,
            pegs: PegState::tower(m as usize + 1, n),
            peg_disk1: 0,
            sweep_left: m - 1,
            ops: OpCounter::new(),
            finished: false,
        })
    }

    pub fn pegs(&self) -> &PegState {
        &self.pegs
    }

    fn turn_disk(&mut self, peg: usize) -> Result<DeltaEvent> {
        let disk = self.pegs.pop(peg)?;
        self.ops.tick(OpKind::DiskMove);
        let target = cyclic_target(disk, peg, self.pegs.peg_count());
        self.pegs.push(target, disk)?;
        self.ops.tick(OpKind::DiskMove);
        let event = self.digits.bump(disk)?;
        self.ops.tick(OpKind::DigitUpdate);
        Ok(event)
    }

    fn step(&mut self) -> Result<Option<DeltaEvent>> {
        if self.finished || self.digits.radixes.is_empty() {
            self.finished = true;
            return Ok(None);
        }
        if self.sweep_left > 0 {
            self.sweep_left -= 1;
            let event = self.turn_disk(self.peg_disk1)?;
            self.peg_disk1 = (self.peg_disk1 + 1) % self.pegs.peg_count();
            return Ok(Some(event));
        }
        self.ops.tick_n(OpKind::PegScan, self.pegs.peg_count() as u64);
        match self.pegs.find_smallest_disk(Some(self.peg_disk1)) {
            None => {
                self.finished = true;
                Ok(None)
            }
            Some((_, peg)) => {
                self.sweep_left = self.m - 1;
                self.turn_disk(peg).map(Some)
            }
        }
    }
}

impl GrayGenerator for EvenTowers {
    fn name(&self) -> &'static str {
        self.name
    }

    fn radixes(&self) -> &RadixVector {
        &self.digits.radixes
    }

    fn current(&self) -> &GrayWord {
        &self.digits.word
    }

    fn advance(&mut self) -> Result<Option<DeltaEvent>> {
        let r = self.step();
        self.ops.end_advance();
        r
    }

    fn ops(&self) -> &OpCounter {
        &self.ops
    }

    fn peg_dump(&self) -> Option<String> {
        Some(self.pegs.dump())
    }

    fn tower_snapshot(&self) -> Option<Vec<Vec<usize>>> {
        Some(self.pegs.snapshot())
    }
}

/// Algorithm EVEN on interval-encoded pegs. The disk to move after a sweep
/// is the smallest disk missing from `D_1`'s peg, so every advance takes a
/// constant number of steps.
#[derive(Debug, Clone)]
pub struct EvenIntervals {
    m: u32,
    digits: Digits,
    pegs: IntervalPegState,
    sweep_left: u32,
    ops: OpCounter,
    finished: bool,
}

pub fn even_intervals_generator(m: u32, n: usize) -> Result<EvenIntervals> {
    check_even(m, "even-intervals")?;
    Ok(EvenIntervals {
        m,
        digits: Digits::new(m, n)?,
        pegs: IntervalPegState::tower(m as usize + 1, n),
        sweep_left: m - 1,
        ops: OpCounter::new(),
        finished: false,
    })
}

impl EvenIntervals {
    pub fn pegs(&self) -> &IntervalPegState {
        &self.pegs
    }

    fn turn_disk(&mut self, peg: usize) -> Result<DeltaEvent> {
        let disk = self.pegs.pop(peg)?;
        self.ops.tick(OpKind::IntervalEdit);
        let target = cyclic_target(disk, peg, self.pegs.peg_count());
        self.pegs.push(target, disk)?;
        // interval edit plus position table update
        self.ops.tick_n(OpKind::IntervalEdit, 2);
        let event = self.digits.bump(disk)?;
        self.ops.tick(OpKind::DigitUpdate);
        Ok(event)
    }

    fn step(&mut self) -> Result<Option<DeltaEvent>> {
        let n = self.digits.radixes.len();
        if self.finished || n == 0 {
            self.finished = true;
            return Ok(None);
        }
        let d1_peg = self.pegs.position(1);
        if self.sweep_left > 0 {
            self.sweep_left -= 1;
            return self.turn_disk(d1_peg).map(Some);
        }
        self.ops.tick(OpKind::PegScan);
        let d = self.pegs.find_smallest_missing_disk(d1_peg).ok_or_else(|| {
            GrayError::ContractViolation(format!("D1's peg P{d1_peg} is empty"))
        })?;
        if d > n {
            self.finished = true;
            return Ok(None);
        }
        self.sweep_left = self.m - 1;
        self.turn_disk(self.pegs.position(d)).map(Some)
    }
}

impl GrayGenerator for EvenIntervals {
    fn name(&self) -> &'static str {
        "even-intervals"
    }

    fn radixes(&self) -> &RadixVector {
        &self.digits.radixes
    }

    fn current(&self) -> &GrayWord {
        &self.digits.word
    }

    fn advance(&mut self) -> Result<Option<DeltaEvent>> {
        let r = self.step();
        self.ops.end_advance();
        r
    }

    fn ops(&self) -> &OpCounter {
        &self.ops
    }

    fn peg_dump(&self) -> Option<String> {
        Some(self.pegs.dump())
    }

    fn tower_snapshot(&self) -> Option<Vec<Vec<usize>>> {
        Some(self.pegs.expand().snapshot())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generator::{collect_deltas, collect_words};
    use crate::oracle::{delta_sequence, reflected_sequence};

    fn rendered<G: GrayGenerator>(g: G) -> Vec<String> {
        collect_words(g)
            .unwrap()
            .iter()
            .map(|w| w.render().unwrap())
            .collect()
    }

    fn oracle(m: u32, n: usize) -> Vec<String> {
        rendered(reflected_sequence(RadixVector::uniform(m, n).unwrap()))
    }

    fn position_of(snapshot: &[Vec<usize>], disk: usize) -> usize {
        snapshot.iter().position(|s| s.contains(&disk)).unwrap()
    }

    /// Advances `g` until its current word renders as `word`.
    fn run_to<G: GrayGenerator>(g: &mut G, word: &str) {
        while g.current().render().unwrap() != word {
            g.advance().unwrap().expect("word not reached");
        }
    }

    #[test]
    fn rejects_odd_radix() {
        assert!(matches!(
            even_generator(3, 2),
            Err(GrayError::EvenRadixRequired { radix: 3, .. })
        ));
        assert!(even_intervals_generator(5, 2).is_err());
    }

    #[test]
    fn quaternary_transitions_and_board() {
        let mut g = even_generator(4, 6).unwrap();
        run_to(&mut g, "211030");
        // Same board as the radix-5 Klagenfurt picture: D6..D1 on 3,2,1,4,1,1.
        let snap = g.tower_snapshot().unwrap();
        let pegs: Vec<usize> = (1..=6).rev().map(|d| position_of(&snap, d)).collect();
        assert_eq!(pegs, vec![3, 2, 1, 4, 1, 1]);
        let e = g.advance().unwrap().unwrap();
        assert_eq!(e.position, 3);
        assert_eq!(position_of(&g.tower_snapshot().unwrap(), 3), 0);
        assert_eq!(g.current().render().unwrap(), "211130");
        g.advance().unwrap();
        assert_eq!(g.current().render().unwrap(), "211131");
    }

    #[test]
    fn hanoi_transitions_and_board() {
        let mut g = hanoi_generator(6);
        run_to(&mut g, "110011");
        // Board of the Hanoi snapshot, read as ternary: 211102.
        let snap = g.tower_snapshot().unwrap();
        let pegs: Vec<usize> = (1..=6).rev().map(|d| position_of(&snap, d)).collect();
        assert_eq!(pegs, vec![2, 1, 1, 1, 0, 2]);
        g.advance().unwrap();
        assert_eq!(g.current().render().unwrap(), "110010");
        assert_eq!(position_of(&g.tower_snapshot().unwrap(), 1), 0);
        let e = g.advance().unwrap().unwrap();
        assert_eq!(e.position, 3);
        assert_eq!(position_of(&g.tower_snapshot().unwrap(), 3), 2);
        assert_eq!(g.current().render().unwrap(), "110110");
    }

    #[test]
    fn full_runs_match_oracle() {
        assert_eq!(rendered(even_generator(4, 6).unwrap()), oracle(4, 6));
        assert_eq!(rendered(even_intervals_generator(4, 6).unwrap()), oracle(4, 6));
        assert_eq!(rendered(even_generator(6, 3).unwrap()), oracle(6, 3));
        assert_eq!(rendered(even_intervals_generator(2, 6).unwrap()), rendered(hanoi_generator(6)));
        assert_eq!(rendered(hanoi_generator(1)), vec!["0", "1"]);
        assert_eq!(&rendered(hanoi_generator(6))[..3], &["000000", "000001", "000011"]);
        assert_eq!(rendered(even_intervals_generator(4, 0).unwrap()), vec![String::new()]);
        assert_eq!(rendered(even_generator(4, 0).unwrap()), vec![String::new()]);
    }

    #[test]
    fn hanoi_moves_follow_delta_sequence() {
        let moved: Vec<usize> = collect_deltas(hanoi_generator(7))
            .unwrap()
            .into_iter()
            .map(|e| e.position)
            .collect();
        let delta: Vec<usize> = delta_sequence(RadixVector::uniform(2, 7).unwrap()).collect();
        assert_eq!(moved, delta);
    }

    #[test]
    fn boards_stay_in_lockstep() {
        let mut plain = even_generator(4, 5).unwrap();
        let mut iv = even_intervals_generator(4, 5).unwrap();
        loop {
            assert_eq!(&iv.pegs().expand(), plain.pegs());
            assert!(iv.pegs().is_consistent());
            let (a, b) = (plain.advance().unwrap(), iv.advance().unwrap());
            assert_eq!(a, b);
            if a.is_none() {
                break;
            }
        }
    }

    #[test]
    fn disks_move_in_parity_direction() {
        let mut g = even_generator(4, 4).unwrap();
        let pegs = 5;
        let mut before = g.tower_snapshot().unwrap();
        while let Some(e) = g.advance().unwrap() {
            let after = g.tower_snapshot().unwrap();
            let d = e.position;
            let (p, q) = (position_of(&before, d), position_of(&after, d));
            let expected = if d % 2 == 1 { (p + 1) % pegs } else { (p + pegs - 1) % pegs };
            assert_eq!(q, expected);
            before = after;
        }
    }

    #[test]
    fn d2_distance_grows_until_covered() {
        // Clockwise distance from D1 to D2 after each D2 move: 1, 2, ..., m-1.
        for m in [2u32, 4, 6] {
            let pegs = m as usize + 1;
            let mut g = even_generator(m, 3).unwrap();
            let mut distances = Vec::new();
            while let Some(e) = g.advance().unwrap() {
                if e.position == 2 {
                    let s = g.tower_snapshot().unwrap();
                    let (p1, p2) = (position_of(&s, 1), position_of(&s, 2));
                    distances.push((p2 + pegs - p1) % pegs);
                }
            }
            let period: Vec<usize> = (1..m as usize).collect();
            for chunk in distances.chunks(m as usize - 1) {
                assert_eq!(chunk, &period[..chunk.len()], "m = {m}");
            }
        }
    }

    #[test]
    fn interval_ops_constant_in_n() {
        let max_for = |n| {
            let mut g = even_intervals_generator(2, n).unwrap();
            while g.advance().unwrap().is_some() {}
            g.ops().max_per_advance()
        };
        assert_eq!(max_for(8), max_for(16));
    }
}
