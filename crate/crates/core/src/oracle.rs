//! Reference implementations: the reflected mixed-radix Gray code as an
//! odometer with per-digit sweep directions, the delta sequence produced by
//! lexicographic counting, and the ruler functions that describe it.
//!
//! Nothing here is loopless. These are the ground truth that the tower and
//! work-ahead generators are checked against.

use crate::error::{GrayError, Result};
use crate::generator::{GrayGenerator, OpCounter, OpKind};
use crate::word::{DeltaEvent, Direction, GrayWord, RadixVector};

/// Reflected Gray code generator.
///
/// Each advance scans from digit 1 upward, reversing every digit that sits
/// at the end of its sweep, and moves the first digit that can still move.
/// Cost per advance is the index of the changed digit.
#[derive(Debug, Clone)]
pub struct Reflected {
    radixes: RadixVector,
    word: GrayWord,
    directions: Vec<Direction>,
    ops: OpCounter,
    finished: bool,
}

impl Reflected {
    pub fn new(radixes: RadixVector) -> Self {
        let n = radixes.len();
        Self {
            word: GrayWord::zeros(n),
            directions: vec![Direction::Up; n],
            radixes,
            ops: OpCounter::new(),
            finished: false,
        }
    }
}

/// The reflected Gray code over `radixes`, all-zero word first.
pub fn reflected_sequence(radixes: RadixVector) -> Reflected {
    Reflected::new(radixes)
}

impl GrayGenerator for Reflected {
    fn name(&self) -> &'static str {
        "oracle"
    }

    fn radixes(&self) -> &RadixVector {
        &self.radixes
    }

    fn current(&self) -> &GrayWord {
        &self.word
    }

    fn advance(&mut self) -> Result<Option<DeltaEvent>> {
        if self.finished {
            return Ok(None);
        }
        let n = self.radixes.len();
        let mut result = None;
        for j in 1..=n {
            self.ops.tick(OpKind::LoopIteration);
            let dir = self.directions[j - 1];
            match dir.step(self.word.digit(j)) {
                Some(v) if v < self.radixes.radix(j) => {
                    *self.word.digit_mut(j) = v;
                    self.ops.tick(OpKind::DigitUpdate);
                    result = Some(DeltaEvent::new(j, dir));
                    break;
                }
                _ => {
                    self.directions[j - 1] = dir.reversed();
                    self.ops.tick(OpKind::DigitUpdate);
                }
            }
        }
        self.finished = result.is_none();
        self.ops.end_advance();
        Ok(result)
    }

    fn ops(&self) -> &OpCounter {
        &self.ops
    }
}

/// Lexicographic odometer `(b_n, ..., b_1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexCounter {
    digits: Vec<u32>,
}

impl LexCounter {
    pub fn new(n: usize) -> Self {
        Self {
            digits: vec![0; n],
        }
    }

    /// Digit at 1-based position `i`.
    pub fn digit(&self, i: usize) -> u32 {
        self.digits[i - 1]
    }

    /// Counts up by one and returns how many digits changed, or `None` when
    /// the counter wraps past its last value.
    pub fn increment(&mut self, radixes: &RadixVector) -> Option<usize> {
        let n = self.digits.len();
        let mut j = 1;
        while j <= n && self.digits[j - 1] + 1 == radixes.radix(j) {
            self.digits[j - 1] = 0;
            j += 1;
        }
        if j == n + 1 {
            return None;
        }
        self.digits[j - 1] += 1;
        Some(j)
    }
}

/// Delta sequence by lexicographic counting: yields the position changed at
/// each transition of the reflected code.
#[derive(Debug, Clone)]
pub struct DeltaSequence {
    radixes: RadixVector,
    counter: LexCounter,
    done: bool,
}

impl Iterator for DeltaSequence {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.done {
            return None;
        }
        let j = self.counter.increment(&self.radixes);
        self.done = j.is_none();
        j
    }
}

pub fn delta_sequence(radixes: RadixVector) -> DeltaSequence {
    DeltaSequence {
        counter: LexCounter::new(radixes.len()),
        radixes,
        done: false,
    }
}

fn check_rank(k: u64, radixes: &RadixVector) -> Result<()> {
    let in_range = k >= 1 && radixes.word_count().is_none_or(|total| k <= total);
    if in_range {
        Ok(())
    } else {
        Err(GrayError::OutOfRange(format!(
            "k = {k} outside 1..={}",
            radixes
                .word_count()
                .map_or_else(|| "overflow".to_string(), |t| t.to_string())
        )))
    }
}

/// Largest `i` such that `m_1 * ... * m_i` divides `k`.
pub fn ruler(k: u64, radixes: &RadixVector) -> Result<usize> {
    check_rank(k, radixes)?;
    let mut rest = k;
    let mut i = 0;
    for &m in radixes.as_slice() {
        if !rest.is_multiple_of(u64::from(m)) {
            break;
        }
        rest /= u64::from(m);
        i += 1;
    }
    Ok(i)
}

/// `ruler(k) + 1`: the position changed by the `k`-th transition.
pub fn ruler_bar(k: u64, radixes: &RadixVector) -> Result<usize> {
    ruler(k, radixes).map(|r| r + 1)
}

/// `S(k)`, evaluated both as a direct sum of `ruler_bar` and in closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StepSum {
    pub direct: u64,
    pub closed_form: u64,
}

impl StepSum {
    pub fn agrees(&self) -> bool {
        self.direct == self.closed_form
    }
}

/// Number of production steps needed for the first `k` delta positions.
pub fn step_sum(k: u64, radixes: &RadixVector) -> Result<StepSum> {
    check_rank(k, radixes)?;
    let mut direct = 0u64;
    for i in 1..=k {
        direct += ruler_bar(i, radixes)? as u64;
    }
    Ok(StepSum {
        direct,
        closed_form: step_sum_closed_form(k, radixes),
    })
}

/// `k + floor(k/m_1) + floor(k/(m_1 m_2)) + ...`
pub fn step_sum_closed_form(k: u64, radixes: &RadixVector) -> u64 {
    let mut sum = k;
    let mut prefix = 1u64;
    for &m in radixes.as_slice() {
        match prefix.checked_mul(u64::from(m)) {
            Some(p) if p <= k => {
                prefix = p;
                sum += k / prefix;
            }
            _ => break,
        }
    }
    sum
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generator::{collect_deltas, collect_words};

    fn radixes(v: &[u32]) -> RadixVector {
        RadixVector::new(v.to_vec()).unwrap()
    }

    fn rendered(m: RadixVector) -> Vec<String> {
        collect_words(reflected_sequence(m))
            .unwrap()
            .iter()
            .map(|w| w.render().unwrap())
            .collect()
    }

    /// Literal recursive construction: each word of the shorter code is
    /// extended by an upward then downward sweep of the new fastest digit.
    fn recursive_reference(ms: &[u32]) -> Vec<Vec<u32>> {
        match ms.split_first() {
            None => vec![vec![]],
            Some((&m, rest)) => {
                let mut out = Vec::new();
                for (idx, g) in recursive_reference(rest).into_iter().enumerate() {
                    let sweep: Vec<u32> = if idx % 2 == 0 {
                        (0..m).collect()
                    } else {
                        (0..m).rev().collect()
                    };
                    for last in sweep {
                        let mut w = g.clone();
                        w.push(last);
                        out.push(w);
                    }
                }
                out
            }
        }
    }

    #[test]
    fn binary_column() {
        let w = rendered(RadixVector::uniform(2, 6).unwrap());
        assert_eq!(w.len(), 64);
        assert_eq!(&w[..4], &["000000", "000001", "000011", "000010"]);
        assert_eq!(w.last().unwrap(), "100000");
    }

    #[test]
    fn ternary_prefix() {
        let w = rendered(RadixVector::uniform(3, 4).unwrap());
        assert_eq!(&w[..7], &["0000", "0001", "0002", "0012", "0011", "0010", "0020"]);
        assert_eq!(w.last().unwrap(), "2222");
    }

    #[test]
    fn empty_word() {
        assert_eq!(rendered(radixes(&[])), vec![String::new()]);
    }

    #[test]
    fn matches_recursive_reference() {
        for ms in [
            vec![2, 4, 5, 2],
            vec![3; 4],
            vec![2; 6],
            vec![5, 3],
            vec![7],
            vec![4, 2, 3, 2, 5],
        ] {
            let words: Vec<Vec<u32>> = collect_words(reflected_sequence(radixes(&ms)))
                .unwrap()
                .into_iter()
                .map(|w| w.digits().iter().rev().copied().collect())
                .collect();
            assert_eq!(words, recursive_reference(&ms), "radixes {ms:?}");
        }
    }

    #[test]
    fn mixed_radix_full_run_is_gray() {
        let m = radixes(&[2, 4, 5, 2]);
        let words = collect_words(reflected_sequence(m.clone())).unwrap();
        assert_eq!(words.len(), 80);
        let mut sorted = words.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 80);
        for pair in words.windows(2) {
            let diffs: Vec<i64> = pair[0]
                .digits()
                .iter()
                .zip(pair[1].digits())
                .map(|(&a, &b)| i64::from(b) - i64::from(a))
                .filter(|&d| d != 0)
                .collect();
            assert_eq!(diffs.len(), 1);
            assert_eq!(diffs[0].abs(), 1);
        }
    }

    #[test]
    fn stays_finished() {
        let mut g = reflected_sequence(radixes(&[2]));
        assert!(g.advance().unwrap().is_some());
        assert!(g.advance().unwrap().is_none());
        assert!(g.advance().unwrap().is_none());
        assert_eq!(g.current().render().unwrap(), "1");
    }

    #[test]
    fn delta_examples() {
        let binary: Vec<usize> = delta_sequence(RadixVector::uniform(2, 4).unwrap()).collect();
        assert_eq!(&binary[..11], &[1, 2, 1, 3, 1, 2, 1, 4, 1, 2, 1]);
        assert_eq!(binary.len(), 15);

        let single: Vec<usize> = delta_sequence(radixes(&[5])).collect();
        assert_eq!(single, vec![1, 1, 1, 1]);

        let mixed: Vec<usize> = delta_sequence(radixes(&[2, 4, 5, 2])).collect();
        assert_eq!(&mixed[..8], &[1, 2, 1, 2, 1, 2, 1, 3]);
        assert_eq!(mixed.len(), 79);

        assert_eq!(delta_sequence(radixes(&[])).count(), 0);
    }

    #[test]
    fn delta_matches_changed_positions() {
        for ms in [vec![2, 4, 5, 2], vec![3, 3, 3], vec![6, 2, 5]] {
            let m = radixes(&ms);
            let changed: Vec<usize> = collect_deltas(reflected_sequence(m.clone()))
                .unwrap()
                .into_iter()
                .map(|e| e.position)
                .collect();
            let delta: Vec<usize> = delta_sequence(m.clone()).collect();
            assert_eq!(changed, delta);
            for (k, &j) in delta.iter().enumerate() {
                assert_eq!(ruler_bar(k as u64 + 1, &m).unwrap(), j);
            }
        }
    }

    #[test]
    fn ruler_examples() {
        let m = radixes(&[2, 4, 5, 2]);
        assert_eq!(ruler_bar(8, &m).unwrap(), 3);
        assert_eq!(ruler_bar(1, &m).unwrap(), 1);
        assert_eq!(ruler_bar(80, &m).unwrap(), 5);
        assert_eq!(ruler_bar(4, &RadixVector::uniform(2, 4).unwrap()).unwrap(), 3);
        assert!(matches!(ruler(0, &m), Err(GrayError::OutOfRange(_))));
        assert!(ruler(81, &m).is_err());
    }

    #[test]
    fn step_sum_examples() {
        for n in 1..=10 {
            let m = RadixVector::uniform(2, n).unwrap();
            let k = 1u64 << n;
            let s = step_sum(k, &m).unwrap();
            assert!(s.agrees());
            assert_eq!(s.direct, 2 * k - 1);
        }
        let m = radixes(&[2, 4, 5, 2]);
        assert_eq!(step_sum(1, &m).unwrap().direct, 1);
        let s = step_sum(80, &m).unwrap();
        assert_eq!(s, StepSum { direct: 133, closed_form: 133 });
        assert!(s.direct <= 160);
        assert!(step_sum(0, &m).is_err());
    }

    #[test]
    fn step_sum_bounds() {
        for ms in [vec![2, 4, 5, 2], vec![3, 2, 2, 3], vec![2; 7]] {
            let m = radixes(&ms);
            let total = m.word_count().unwrap();
            let n = m.len() as u64;
            let sums: Vec<u64> = (1..=total)
                .map(|k| step_sum(k, &m).unwrap())
                .inspect(|s| assert!(s.agrees()))
                .map(|s| s.direct)
                .collect();
            for k in 1..=total {
                let s_k = sums[(k - 1) as usize];
                assert!(s_k <= 2 * k);
                for k2 in 1..=k {
                    let s_k2 = sums[(k2 - 1) as usize];
                    assert!(s_k - s_k2 < 2 * (k - k2) + n);
                }
            }
        }
    }
}
