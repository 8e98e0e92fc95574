//! Peg-and-disk boards for the tower algorithms.
//!
//! Disks are numbered from 1 (smallest). [`PegState`] keeps one stack per
//! peg; [`IntervalPegState`] stores each peg as a stack of maximal runs of
//! consecutive disks so that the smallest disk missing from a peg can be
//! read off in constant time.

use std::fmt;

use crate::error::{GrayError, Result};
use crate::word::Direction;

/// Anything that can sit on a peg.
pub trait Disk: Copy + fmt::Display {
    fn id(&self) -> usize;
}

impl Disk for usize {
    fn id(&self) -> usize {
        *self
    }
}

/// A disk carrying a dial: its digit value, the direction of its next turn,
/// and its own radix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DialDisk {
    pub id: usize,
    pub value: u32,
    pub direction: Direction,
    pub radix: u32,
}

impl DialDisk {
    pub fn new(id: usize, radix: u32) -> Self {
        Self {
            id,
            value: 0,
            direction: Direction::Up,
            radix,
        }
    }

    /// Mark in up/down notation: `0`, `1↑`, ..., `m-1`, ..., `1↓`.
    ///
    /// The stored direction is the direction of the next turn, so at an
    /// interior value it also names the sweep the value belongs to.
    pub fn mark(&self) -> String {
        if self.value == 0 || self.value + 1 == self.radix {
            self.value.to_string()
        } else {
            let arrow = match self.direction {
                Direction::Up => '↑',
                Direction::Down => '↓',
            };
            format!("{}{arrow}", self.value)
        }
    }

    /// Peg a dial value belongs on in the three-peg layout.
    pub fn home_peg(&self) -> usize {
        if self.value == 0 {
            0
        } else if self.value + 1 == self.radix {
            2
        } else {
            1
        }
    }
}

impl Disk for DialDisk {
    fn id(&self) -> usize {
        self.id
    }
}

impl fmt::Display for DialDisk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.id, self.value, self.direction.sign())
    }
}

/// Plain stack-per-peg board. Each stack is stored bottom first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PegState<D = usize> {
    pegs: Vec<Vec<D>>,
}

impl PegState<usize> {
    /// Disks `n, ..., 1` stacked on peg 0, other pegs empty.
    pub fn tower(peg_count: usize, n: usize) -> Self {
        Self::tower_of(peg_count, (1..=n).rev())
    }
}

impl<D: Disk> PegState<D> {
    /// Stacks `disks` (given bottom first) on peg 0.
    pub fn tower_of(peg_count: usize, disks: impl IntoIterator<Item = D>) -> Self {
        let mut pegs: Vec<Vec<D>> = (0..peg_count).map(|_| Vec::new()).collect();
        pegs[0].extend(disks);
        Self { pegs }
    }

    /// Builds a board from explicit stacks, checking the stacking rule and
    /// that no disk appears twice.
    pub fn from_stacks(pegs: Vec<Vec<D>>) -> Result<Self> {
        let state = Self { pegs };
        if !state.is_legal() {
            return Err(GrayError::ContractViolation(
                "stacks are not strictly decreasing bottom to top".into(),
            ));
        }
        let mut seen: Vec<usize> = state.pegs.iter().flatten().map(Disk::id).collect();
        seen.sort_unstable();
        if seen.windows(2).any(|w| w[0] == w[1]) {
            return Err(GrayError::ContractViolation("disk appears twice".into()));
        }
        Ok(state)
    }

    pub fn peg_count(&self) -> usize {
        self.pegs.len()
    }

    pub fn stack(&self, peg: usize) -> &[D] {
        &self.pegs[peg]
    }

    pub fn top(&self, peg: usize) -> Option<&D> {
        self.pegs[peg].last()
    }

    /// Smallest topmost disk over all pegs other than `exclude`.
    pub fn find_smallest_disk(&self, exclude: Option<usize>) -> Option<(D, usize)> {
        self.pegs
            .iter()
            .enumerate()
            .filter(|&(k, _)| Some(k) != exclude)
            .filter_map(|(k, p)| p.last().map(|d| (*d, k)))
            .min_by_key(|(d, _)| d.id())
    }

    pub fn pop(&mut self, peg: usize) -> Result<D> {
        self.pegs
            .get_mut(peg)
            .and_then(Vec::pop)
            .ok_or_else(|| GrayError::ContractViolation(format!("pop from empty peg P{peg}")))
    }

    /// Puts `disk` on `peg`; fails if it would cover a smaller disk.
    pub fn push(&mut self, peg: usize, disk: D) -> Result<()> {
        let stack = self
            .pegs
            .get_mut(peg)
            .ok_or_else(|| GrayError::ContractViolation(format!("no peg P{peg}")))?;
        if let Some(top) = stack.last() {
            if top.id() <= disk.id() {
                return Err(GrayError::ContractViolation(format!(
                    "disk {} placed on smaller disk {} at P{peg}",
                    disk.id(),
                    top.id()
                )));
            }
        }
        stack.push(disk);
        Ok(())
    }

    /// Moves the topmost disk of `from` onto `to`. The board is unchanged
    /// when the move is illegal.
    pub fn move_top(&mut self, from: usize, to: usize) -> Result<()> {
        let disk = *self
            .pegs
            .get(from)
            .and_then(|p| p.last())
            .ok_or_else(|| GrayError::ContractViolation(format!("P{from} is empty")))?;
        if let Some(top) = self.pegs.get(to).and_then(|p| p.last()) {
            if top.id() <= disk.id() {
                return Err(GrayError::ContractViolation(format!(
                    "cannot move disk {} from P{from} onto disk {} at P{to}",
                    disk.id(),
                    top.id()
                )));
            }
        }
        self.pop(from)?;
        self.push(to, disk)
    }

    /// Stacking rule holds on every peg.
    pub fn is_legal(&self) -> bool {
        self.pegs
            .iter()
            .all(|p| p.windows(2).all(|w| w[0].id() > w[1].id()))
    }

    /// Disk ids per peg, bottom first.
    pub fn snapshot(&self) -> Vec<Vec<usize>> {
        self.pegs
            .iter()
            .map(|p| p.iter().map(Disk::id).collect())
            .collect()
    }

    /// Dump format: `P0:6,5,4 P1:3 P2:2,1`.
    pub fn dump(&self) -> String {
        dump_stacks(self.pegs.iter().map(|p| p.iter().map(|d| d.to_string())))
    }
}

impl<D: Disk> fmt::Display for PegState<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.dump())
    }
}

fn dump_stacks<P, I>(pegs: P) -> String
where
    P: Iterator<Item = I>,
    I: Iterator<Item = String>,
{
    pegs.enumerate()
        .map(|(k, items)| format!("P{k}:{}", items.collect::<Vec<_>>().join(",")))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Board whose pegs are stacks of maximal intervals `(a, b)` of consecutive
/// disks, smallest interval on top, plus a per-disk peg table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalPegState {
    pegs: Vec<Vec<(usize, usize)>>,
    position: Vec<usize>,
}

impl IntervalPegState {
    /// Disks `1..=n` as the single interval `(1, n)` on peg 0.
    pub fn tower(peg_count: usize, n: usize) -> Self {
        let mut pegs: Vec<Vec<(usize, usize)>> = (0..peg_count).map(|_| Vec::new()).collect();
        if n > 0 {
            pegs[0].push((1, n));
        }
        Self {
            pegs,
            position: vec![0; n + 1],
        }
    }

    /// Encodes a plain board.
    pub fn from_pegs(state: &PegState<usize>) -> Result<Self> {
        if !state.is_legal() {
            return Err(GrayError::ContractViolation("illegal board".into()));
        }
        let n = state.pegs.iter().flatten().copied().max().unwrap_or(0);
        let mut position = vec![0; n + 1];
        let mut pegs = Vec::with_capacity(state.peg_count());
        for (k, stack) in state.pegs.iter().enumerate() {
            let mut runs: Vec<(usize, usize)> = Vec::new();
            for &d in stack {
                position[d] = k;
                match runs.last_mut() {
                    Some(run) if run.0 == d + 1 => run.0 = d,
                    _ => runs.push((d, d)),
                }
            }
            pegs.push(runs);
        }
        Ok(Self { pegs, position })
    }

    pub fn peg_count(&self) -> usize {
        self.pegs.len()
    }

    /// Number of disks.
    pub fn disk_count(&self) -> usize {
        self.position.len() - 1
    }

    /// Peg currently holding `disk`.
    pub fn position(&self, disk: usize) -> usize {
        self.position[disk]
    }

    /// Intervals on `peg`, bottom first.
    pub fn intervals(&self, peg: usize) -> &[(usize, usize)] {
        &self.pegs[peg]
    }

    /// Removes and returns the smallest disk on `peg`.
    pub fn pop(&mut self, peg: usize) -> Result<usize> {
        let stack = self
            .pegs
            .get_mut(peg)
            .ok_or_else(|| GrayError::ContractViolation(format!("no peg P{peg}")))?;
        let top = stack
            .last_mut()
            .ok_or_else(|| GrayError::ContractViolation(format!("pop from empty peg P{peg}")))?;
        let disk = top.0;
        if top.0 == top.1 {
            stack.pop();
        } else {
            top.0 += 1;
        }
        Ok(disk)
    }

    /// Puts `disk` on `peg`, merging with the top interval when adjacent.
    pub fn push(&mut self, peg: usize, disk: usize) -> Result<()> {
        if disk == 0 || disk >= self.position.len() {
            return Err(GrayError::ContractViolation(format!("no disk {disk}")));
        }
        let stack = self
            .pegs
            .get_mut(peg)
            .ok_or_else(|| GrayError::ContractViolation(format!("no peg P{peg}")))?;
        match stack.last_mut() {
            Some(top) if disk >= top.0 => {
                return Err(GrayError::ContractViolation(format!(
                    "disk {disk} placed on smaller disk {} at P{peg}",
                    top.0
                )));
            }
            Some(top) if disk + 1 == top.0 => top.0 = disk,
            _ => stack.push((disk, disk)),
        }
        self.position[disk] = peg;
        Ok(())
    }

    /// Moves the smallest disk of `from` to `to` and returns it.
    pub fn move_top(&mut self, from: usize, to: usize) -> Result<usize> {
        if let (Some(&(a, _)), Some(&(b, _))) = (
            self.pegs.get(from).and_then(|p| p.last()),
            self.pegs.get(to).and_then(|p| p.last()),
        ) {
            if b <= a {
                return Err(GrayError::ContractViolation(format!(
                    "cannot move disk {a} from P{from} onto disk {b} at P{to}"
                )));
            }
        }
        let disk = self.pop(from)?;
        self.push(to, disk)?;
        Ok(disk)
    }

    /// `b + 1` for the top interval `(a, b)` of `peg`; `None` if empty.
    pub fn find_smallest_missing_disk(&self, peg: usize) -> Option<usize> {
        self.pegs[peg].last().map(|&(_, b)| b + 1)
    }

    /// Expands the intervals back into plain stacks.
    pub fn expand(&self) -> PegState<usize> {
        PegState {
            pegs: self
                .pegs
                .iter()
                .map(|runs| runs.iter().flat_map(|&(a, b)| (a..=b).rev()).collect())
                .collect(),
        }
    }

    /// Intervals sorted, disjoint, maximal, and consistent with the
    /// position table.
    pub fn is_consistent(&self) -> bool {
        for (k, runs) in self.pegs.iter().enumerate() {
            for &(a, b) in runs {
                if a == 0 || a > b || b >= self.position.len() {
                    return false;
                }
                if (a..=b).any(|d| self.position[d] != k) {
                    return false;
                }
            }
            // lower interval (x, y), upper (u, v): need v + 1 < x
            if runs.windows(2).any(|w| w[1].1 + 1 >= w[0].0) {
                return false;
            }
        }
        let total: usize = self.pegs.iter().flatten().map(|&(a, b)| b - a + 1).sum();
        total == self.disk_count()
    }

    /// Interval dump: `P0:(4, 6),(1, 2) P1: ...`.
    pub fn dump(&self) -> String {
        dump_stacks(
            self.pegs
                .iter()
                .map(|runs| runs.iter().map(|(a, b)| format!("({a}, {b})"))),
        )
    }
}

impl fmt::Display for IntervalPegState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.dump())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn board(stacks: &[&[usize]]) -> PegState {
        PegState::from_stacks(stacks.iter().map(|s| s.to_vec()).collect()).unwrap()
    }

    #[test]
    fn smallest_disk_examples() {
        let b = board(&[&[6, 5, 4, 3], &[2], &[1]]);
        assert_eq!(b.find_smallest_disk(Some(2)), Some((2, 1)));
        assert_eq!(b.find_smallest_disk(None), Some((1, 2)));

        let all = PegState::tower(3, 6);
        assert_eq!(all.find_smallest_disk(Some(0)), None);

        let b = board(&[&[], &[3], &[2, 1]]);
        let brute = (0..3)
            .filter_map(|k| b.top(k).map(|&d| (d, k)))
            .min()
            .unwrap();
        assert_eq!(b.find_smallest_disk(None), Some(brute));
    }

    #[test]
    fn move_top_examples() {
        let mut b = board(&[&[2, 1], &[]]);
        b.move_top(0, 1).unwrap();
        assert_eq!(b.snapshot(), vec![vec![2], vec![1]]);

        let before = b.clone();
        assert!(matches!(b.move_top(0, 1), Err(GrayError::ContractViolation(_))));
        assert_eq!(b, before);
        assert!(b.move_top(2, 0).is_err());

        // Hanoi snapshot: D1 on P2 moves clockwise to P0.
        let mut b = board(&[&[5], &[6, 4, 3, 2], &[1]]);
        b.move_top(2, 0).unwrap();
        assert_eq!(b.dump(), "P0:5,1 P1:6,4,3,2 P2:");
    }

    #[test]
    fn from_stacks_rejects_bad_boards() {
        assert!(PegState::from_stacks(vec![vec![1, 2]]).is_err());
        assert!(PegState::from_stacks(vec![vec![2], vec![2]]).is_err());
    }

    #[test]
    fn dump_format() {
        let b = board(&[&[6, 5, 4], &[3], &[2, 1]]);
        assert_eq!(b.dump(), "P0:6,5,4 P1:3 P2:2,1");
        assert_eq!(PegState::tower(3, 0).dump(), "P0: P1: P2:");

        let dials = PegState::tower_of(3, (1..=2).rev().map(|i| DialDisk::new(i, 5)));
        assert_eq!(dials.dump(), "P0:(2, 0, 1),(1, 0, 1) P1: P2:");

        let iv = IntervalPegState::tower(5, 6);
        assert_eq!(iv.dump(), "P0:(1, 6) P1: P2: P3: P4:");
    }

    #[test]
    fn dial_marks() {
        let mut d = DialDisk::new(1, 5);
        assert_eq!(d.mark(), "0");
        d.value = 2;
        assert_eq!(d.mark(), "2↑");
        assert_eq!(d.home_peg(), 1);
        d.value = 4;
        d.direction = Direction::Down;
        assert_eq!(d.mark(), "4");
        assert_eq!(d.home_peg(), 2);
        d.value = 1;
        assert_eq!(d.mark(), "1↓");
    }

    #[test]
    fn interval_pop_push_examples() {
        let mut s = IntervalPegState::tower(3, 3);
        assert_eq!(s.pop(0).unwrap(), 1);
        assert_eq!(s.intervals(0), &[(2, 3)]);
        assert_eq!(s.position(2), 0);

        let mut s = IntervalPegState::from_pegs(&board(&[&[5, 4, 3], &[2, 1]])).unwrap();
        assert_eq!(s.intervals(0), &[(3, 5)]);
        s.move_top(0, 1).unwrap_err();
        let d = s.pop(1).unwrap();
        assert_eq!(d, 1);
        let d = s.pop(1).unwrap();
        s.push(0, d).unwrap();
        assert_eq!(s.intervals(0), &[(2, 5)]);
        assert_eq!(s.position(2), 0);

        let mut s = IntervalPegState::from_pegs(&board(&[&[5, 4], &[3], &[2, 1]])).unwrap();
        let one = s.pop(2).unwrap();
        s.push(1, one).unwrap();
        let two = s.pop(2).unwrap();
        s.push(0, two).unwrap();
        assert_eq!(s.intervals(0), &[(4, 5), (2, 2)]);
        assert!(s.is_consistent());
    }

    #[test]
    fn interval_errors() {
        let mut s = IntervalPegState::tower(3, 2);
        assert!(matches!(s.pop(1), Err(GrayError::ContractViolation(_))));
        s.pop(0).unwrap();
        s.push(1, 1).unwrap();
        assert!(s.push(1, 2).is_err());
        assert!(s.push(0, 7).is_err());
    }

    #[test]
    fn smallest_missing_examples() {
        let s = IntervalPegState::from_pegs(&board(&[&[6, 5, 4], &[3, 2, 1]])).unwrap();
        assert_eq!(s.find_smallest_missing_disk(1), Some(4));
        let s = IntervalPegState::tower(3, 6);
        assert_eq!(s.find_smallest_missing_disk(0), Some(7));
        assert_eq!(s.find_smallest_missing_disk(1), None);
        let s = IntervalPegState::from_pegs(&board(&[&[6, 5, 2, 1], &[4, 3]])).unwrap();
        assert_eq!(s.intervals(0), &[(5, 6), (1, 2)]);
        assert_eq!(s.find_smallest_missing_disk(0), Some(3));
    }

    proptest! {
        // Random legal move sequences keep both encodings in lockstep.
        #[test]
        fn interval_board_tracks_plain_board(
            n in 1usize..9,
            pegs in 2usize..6,
            moves in proptest::collection::vec((0usize..6, 0usize..6), 0..200),
        ) {
            let mut plain = PegState::tower(pegs, n);
            let mut iv = IntervalPegState::tower(pegs, n);
            for (from, to) in moves {
                let (from, to) = (from % pegs, to % pegs);
                if from == to {
                    continue;
                }
                let a = plain.move_top(from, to);
                let b = iv.move_top(from, to);
                prop_assert_eq!(a.is_ok(), b.is_ok());
                prop_assert!(plain.is_legal());
                prop_assert!(iv.is_consistent());
                prop_assert_eq!(iv.expand(), plain.clone());
                for k in 0..pegs {
                    let expected = plain.top(k).map(|&d| {
                        let mut e = d;
                        while plain.stack(k).contains(&(e + 1)) { e += 1; }
                        e + 1
                    });
                    if plain.stack(k).contains(&1) {
                        prop_assert_eq!(iv.find_smallest_missing_disk(k), expected);
                    }
                }
            }
        }
    }
}
