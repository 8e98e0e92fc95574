//! Tower generators for odd radixes.
//!
//! [`OddTowers`] plays the game on `m` pegs in a row: disk `D_i` sits on peg
//! `a_i`, so the word is read directly off the board. `D_1` sweeps `m - 1`
//! steps between the end pegs; whenever it rests, the smallest top disk not
//! covered by `D_1` takes one step. With `m = 3` this is the Towers of
//! Bucharest.
//!
//! [`OddCompressed`] merges the intermediate pegs into one. Each disk carries
//! a dial with its value and next direction, and a virtual control disk
//! alternately blocks `P2` and `P0`, which removes the special treatment of
//! `D_1`. Radixes may differ per position as long as all are odd.

use crate::error::{GrayError, Result};
use crate::generator::{GrayGenerator, OpCounter, OpKind};
use crate::pegboard::{DialDisk, PegState};
use crate::word::{DeltaEvent, Direction, GrayWord, RadixVector};

fn require_odd(algorithm: &'static str, radixes: &RadixVector) -> Result<()> {
    for (i, &m) in radixes.as_slice().iter().enumerate() {
        if m % 2 == 0 {
            return Err(GrayError::OddRadixRequired {
                algorithm,
                position: i + 1,
                radix: m,
            });
        }
    }
    Ok(())
}

/// Algorithm ODD on `m` pegs.
#[derive(Debug, Clone)]
pub struct OddTowers {
    name: &'static str,
    m: u32,
    radixes: RadixVector,
    pegs: PegState,
    /// Direction of the next move of each disk, indexed by `disk - 1`.
    directions: Vec<Direction>,
    word: GrayWord,
    sweep_left: u32,
    ops: OpCounter,
    finished: bool,
}

/// Algorithm ODD for odd `m >= 3` and `n` digits.
pub fn odd_generator(m: u32, n: usize) -> Result<OddTowers> {
    OddTowers::new("odd", m, n)
}

/// Towers of Bucharest: three pegs, moves only between neighbours.
pub fn bucharest_generator(n: usize) -> OddTowers {
    OddTowers::new("bucharest", 3, n).expect("radix 3 is odd")
}

impl OddTowers {
    fn new(name: &'static str, m: u32, n: usize) -> Result<Self> {
        if m.is_multiple_of(2) {
            return Err(GrayError::OddRadixRequired {
                algorithm: "odd",
                position: 1,
                radix: m,
            });
        }
        let radixes = RadixVector::uniform(m, n)?;
        Ok(Self {
            name,
            m,
            pegs: PegState::tower(m as usize, n),
            directions: vec![Direction::Up; n],
            word: GrayWord::zeros(n),
            sweep_left: m - 1,
            radixes,
            ops: OpCounter::new(),
            finished: false,
        })
    }

    pub fn pegs(&self) -> &PegState {
        &self.pegs
    }

    fn move_disk(&mut self, peg: usize) -> Result<DeltaEvent> {
        let disk = self.pegs.pop(peg)?;
        self.ops.tick(OpKind::DiskMove);
        let dir = self.directions[disk - 1];
        let target = match dir {
            Direction::Up => peg + 1,
            Direction::Down => peg.checked_sub(1).ok_or_else(|| {
                GrayError::ContractViolation(format!("disk {disk} pushed left of P0"))
            })?,
        };
        let event = DeltaEvent::new(disk, dir);
        self.word.apply(event, &self.radixes)?;
        self.ops.tick(OpKind::DigitUpdate);
        if target + 1 == self.m as usize {
            self.directions[disk - 1] = Direction::Down;
        } else if target == 0 {
            self.directions[disk - 1] = Direction::Up;
        }
        self.pegs.push(target, disk)?;
        self.ops.tick(OpKind::DiskMove);
        Ok(event)
    }

    fn step(&mut self) -> Result<Option<DeltaEvent>> {
        if self.finished || self.radixes.is_empty() {
            self.finished = true;
            return Ok(None);
        }
        let d1_peg = self.word.digit(1) as usize;
        if self.sweep_left > 0 {
            self.sweep_left -= 1;
            return self.move_disk(d1_peg).map(Some);
        }
        self.ops.tick_n(OpKind::PegScan, self.pegs.peg_count() as u64);
        match self.pegs.find_smallest_disk(Some(d1_peg)) {
            None => {
                self.finished = true;
                Ok(None)
            }
            Some((_, peg)) => {
                self.sweep_left = self.m - 1;
                self.move_disk(peg).map(Some)
            }
        }
    }
}

impl GrayGenerator for OddTowers {
    fn name(&self) -> &'static str {
        self.name
    }

    fn radixes(&self) -> &RadixVector {
        &self.radixes
    }

    fn current(&self) -> &GrayWord {
        &self.word
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

/// Algorithm ODD-COMPRESSED on three pegs with dial disks.
#[derive(Debug, Clone)]
pub struct OddCompressed {
    radixes: RadixVector,
    pegs: PegState<DialDisk>,
    /// Peg currently blocked by the control disk: 2 or 0.
    control: usize,
    word: GrayWord,
    ops: OpCounter,
    finished: bool,
}

/// Mixed-radix generator for all-odd radixes on three pegs.
pub fn odd_compressed_generator(radixes: RadixVector) -> Result<OddCompressed> {
    require_odd("odd-compressed", &radixes)?;
    let n = radixes.len();
    let disks = (1..=n).rev().map(|i| DialDisk::new(i, radixes.radix(i)));
    Ok(OddCompressed {
        pegs: PegState::tower_of(3, disks),
        control: 2,
        word: GrayWord::zeros(n),
        radixes,
        ops: OpCounter::new(),
        finished: false,
    })
}

impl OddCompressed {
    pub fn pegs(&self) -> &PegState<DialDisk> {
        &self.pegs
    }

    fn turn_disk(&mut self, peg: usize) -> Result<DeltaEvent> {
        let mut disk = self.pegs.pop(peg)?;
        self.ops.tick(OpKind::DiskMove);
        let last = disk.radix - 1;
        let dir = disk.direction;
        let next = dir
            .step(disk.value)
            .filter(|&v| v <= last)
            .ok_or_else(|| GrayError::ContractViolation(format!("dial of disk {} overrun", disk.id)))?;
        let target = if disk.value == 0 || disk.value == last || next == 0 || next == last {
            match dir {
                Direction::Up => peg + 1,
                Direction::Down => peg.wrapping_sub(1),
            }
        } else {
            peg
        };
        disk.value = next;
        if next == 0 || next == last {
            disk.direction = dir.reversed();
        }
        self.ops.tick(OpKind::DigitUpdate);
        if target != disk.home_peg() {
            return Err(GrayError::ContractViolation(format!(
                "disk {} with value {} landed on P{target}",
                disk.id, disk.value
            )));
        }
        *self.word.digit_mut(disk.id) = disk.value;
        self.pegs.push(target, disk)?;
        self.ops.tick(OpKind::DiskMove);
        Ok(DeltaEvent::new(disk.id, dir))
    }

    fn step(&mut self) -> Result<Option<DeltaEvent>> {
        if self.finished {
            return Ok(None);
        }
        self.ops.tick_n(OpKind::PegScan, 3);
        match self.pegs.find_smallest_disk(Some(self.control)) {
            None => {
                self.finished = true;
                Ok(None)
            }
            Some((_, peg)) => {
                self.control = 2 - self.control;
                self.turn_disk(peg).map(Some)
            }
        }
    }
}

impl GrayGenerator for OddCompressed {
    fn name(&self) -> &'static str {
        "odd-compressed"
    }

    fn radixes(&self) -> &RadixVector {
        &self.radixes
    }

    fn current(&self) -> &GrayWord {
        &self.word
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

/// Board of the Towers of Bucharest for a ternary word: disk `D_i` on peg
/// `a_i`.
pub fn bucharest_board(word: &GrayWord) -> Result<PegState> {
    let mut pegs = vec![Vec::new(); 3];
    for disk in (1..=word.len()).rev() {
        let peg = word.digit(disk) as usize;
        if peg > 2 {
            return Err(GrayError::OutOfRange(format!("digit {peg} is not ternary")));
        }
        pegs[peg].push(disk);
    }
    PegState::from_stacks(pegs)
}

/// Legal moves between neighbouring pegs on a three-peg board.
pub fn bucharest_moves(board: &PegState) -> Vec<(usize, usize)> {
    let mut moves = Vec::new();
    for from in 0..board.peg_count() {
        let Some(&disk) = board.top(from) else {
            continue;
        };
        for to in [from.wrapping_sub(1), from + 1] {
            if to < board.peg_count() && board.top(to).is_none_or(|&t| t > disk) {
                moves.push((from, to));
            }
        }
    }
    moves
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generator::collect_words;
    use crate::oracle::reflected_sequence;

    fn rendered<G: GrayGenerator>(g: G) -> Vec<String> {
        collect_words(g)
            .unwrap()
            .iter()
            .map(|w| w.render().unwrap())
            .collect()
    }

    fn oracle(ms: &[u32]) -> Vec<String> {
        rendered(reflected_sequence(RadixVector::new(ms.to_vec()).unwrap()))
    }

    fn follows(words: &[String], chain: &[&str]) -> bool {
        words
            .windows(chain.len())
            .any(|w| w.iter().zip(chain).all(|(a, b)| a == b))
    }

    #[test]
    fn rejects_even_radix() {
        let err = odd_generator(4, 3).unwrap_err();
        assert!(err.to_string().contains("odd algorithm requires odd radix"));
        let err = odd_compressed_generator(RadixVector::new(vec![3, 4]).unwrap()).unwrap_err();
        assert!(matches!(err, GrayError::OddRadixRequired { position: 2, radix: 4, .. }));
    }

    #[test]
    fn ternary_transitions() {
        let w = rendered(odd_generator(3, 6).unwrap());
        assert_eq!(w.len(), 729);
        assert!(follows(&w, &["211102", "211101", "211100", "211200"]));
        assert_eq!(w, oracle(&[3; 6]));
    }

    #[test]
    fn klagenfurt_transitions() {
        let w = rendered(odd_generator(5, 6).unwrap());
        assert!(follows(&w, &["321411", "321410", "321420"]));
    }

    #[test]
    fn word_is_read_off_the_pegs() {
        let mut g = odd_generator(5, 3).unwrap();
        loop {
            for (peg, stack) in g.pegs().snapshot().iter().enumerate() {
                for &d in stack {
                    assert_eq!(g.current().digit(d) as usize, peg);
                }
            }
            if g.advance().unwrap().is_none() {
                break;
            }
        }
    }

    #[test]
    fn bucharest_small() {
        assert_eq!(rendered(bucharest_generator(1)), vec!["0", "1", "2"]);
        let w = rendered(bucharest_generator(4));
        assert_eq!(&w[..3], &["0000", "0001", "0002"]);
        assert_eq!(w, oracle(&[3; 4]));
        assert_eq!(rendered(bucharest_generator(0)), vec![String::new()]);
        assert_eq!(bucharest_generator(2).name(), "bucharest");
    }

    #[test]
    fn bucharest_degrees_along_the_run() {
        let mut g = bucharest_generator(4);
        loop {
            let board = bucharest_board(g.current()).unwrap();
            assert_eq!(&board, g.pegs());
            let w = g.current().render().unwrap();
            let expected = if w == "0000" || w == "2222" { 1 } else { 2 };
            assert_eq!(bucharest_moves(&board).len(), expected, "{w}");
            if g.advance().unwrap().is_none() {
                break;
            }
        }
    }

    #[test]
    fn compressed_matches_oracle() {
        assert_eq!(
            rendered(odd_compressed_generator(RadixVector::uniform(5, 5).unwrap()).unwrap()),
            oracle(&[5; 5])
        );
        assert_eq!(
            rendered(odd_compressed_generator(RadixVector::new(vec![3, 5, 3]).unwrap()).unwrap()),
            oracle(&[3, 5, 3])
        );
        assert_eq!(
            rendered(odd_compressed_generator(RadixVector::new(vec![]).unwrap()).unwrap()),
            vec![String::new()]
        );
    }

    #[test]
    fn compressed_matches_plain_odd() {
        for (m, n) in [(3, 5), (5, 4), (7, 3)] {
            assert_eq!(
                rendered(odd_generator(m, n).unwrap()),
                rendered(odd_compressed_generator(RadixVector::uniform(m, n).unwrap()).unwrap())
            );
        }
    }

    #[test]
    fn dial_cycle() {
        // D_1 of a 2-digit radix-5 run: 0, 1↑, 2↑, 3↑, 4, 3↓, 2↓, 1↓, 0
        let mut g = odd_compressed_generator(RadixVector::uniform(5, 2).unwrap()).unwrap();
        let mut marks = Vec::new();
        let d1_mark = |g: &OddCompressed| {
            (0..3)
                .flat_map(|p| g.pegs().stack(p).to_vec())
                .find(|d| d.id == 1)
                .unwrap()
                .mark()
        };
        marks.push(d1_mark(&g));
        while let Some(e) = g.advance().unwrap() {
            if e.position == 1 {
                marks.push(d1_mark(&g));
            }
            if marks.len() == 9 {
                break;
            }
        }
        // After a turn the stored direction is the next one, so interior
        // values on the way up read ↑ and on the way down read ↓.
        assert_eq!(marks, ["0", "1↑", "2↑", "3↑", "4", "3↓", "2↓", "1↓", "0"]);
    }

    #[test]
    fn initial_dump() {
        let g = odd_generator(3, 6).unwrap();
        assert_eq!(g.peg_dump().unwrap(), "P0:6,5,4,3,2,1 P1: P2:");
    }
}
