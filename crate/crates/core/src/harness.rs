//! Cross-checking generators against each other, asserting the buffer and
//! tower lemmas over full runs, and per-advance cost profiling.

use std::fmt;
use std::thread;

use serde::Serialize;

use crate::algorithm::{Algorithm, BoxedGenerator};
use crate::error::{GrayError, Result};
use crate::generator::GrayGenerator;
use crate::odd::{bucharest_board, bucharest_moves, odd_compressed_generator, odd_generator};
use crate::even::{even_generator, even_intervals_generator};
use crate::oracle::{reflected_sequence, ruler_bar, step_sum_closed_form};
use crate::word::{GrayWord, RadixVector};
use crate::workahead::{WorkAhead, Variant};

/// Default cap on `N` for exhaustive checks.
pub const DEFAULT_MAX_WORDS: u64 = 1_000_000;

/// Outcome of running two generators in lockstep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum DivergenceReport {
    Equal {
        left: String,
        right: String,
        count: u64,
    },
    Diverged {
        left: String,
        right: String,
        /// 0-based index of the first differing word.
        index: u64,
        /// `None` when that side had already ended.
        left_word: Option<GrayWord>,
        right_word: Option<GrayWord>,
    },
}

impl DivergenceReport {
    pub fn is_equal(&self) -> bool {
        matches!(self, DivergenceReport::Equal { .. })
    }
}

impl fmt::Display for DivergenceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |w: &Option<GrayWord>| w.as_ref().map_or_else(|| "<end>".to_string(), |w| w.to_string());
        match self {
            DivergenceReport::Equal { left, right, count } => {
                write!(f, "{left} == {right}: {count} words")
            }
            DivergenceReport::Diverged {
                left,
                right,
                index,
                left_word,
                right_word,
            } => write!(
                f,
                "{left} != {right} at word {index}: {} vs {}",
                show(left_word),
                show(right_word)
            ),
        }
    }
}

/// Runs both generators to the end and compares their words.
pub fn verify_equal<A, B>(mut left: A, mut right: B) -> Result<DivergenceReport>
where
    A: GrayGenerator,
    B: GrayGenerator,
{
    let (ln, rn) = (left.name().to_string(), right.name().to_string());
    let mut index = 0u64;
    loop {
        if left.current() != right.current() {
            return Ok(DivergenceReport::Diverged {
                left: ln,
                right: rn,
                index,
                left_word: Some(left.current().clone()),
                right_word: Some(right.current().clone()),
            });
        }
        let (a, b) = (left.advance()?, right.advance()?);
        index += 1;
        match (a.is_some(), b.is_some()) {
            (true, true) => {}
            (false, false) => {
                return Ok(DivergenceReport::Equal {
                    left: ln,
                    right: rn,
                    count: index,
                })
            }
            (true, false) => {
                return Ok(DivergenceReport::Diverged {
                    left: ln,
                    right: rn,
                    index,
                    left_word: Some(left.current().clone()),
                    right_word: None,
                })
            }
            (false, true) => {
                return Ok(DivergenceReport::Diverged {
                    left: ln,
                    right: rn,
                    index,
                    left_word: None,
                    right_word: Some(right.current().clone()),
                })
            }
        }
    }
}

/// Compares every pair of `algorithms` on `radixes`, one thread per pair.
/// Fails up front if any algorithm rejects the radix vector.
pub fn verify_all(algorithms: &[Algorithm], radixes: &RadixVector) -> Result<Vec<DivergenceReport>> {
    for a in algorithms {
        a.build(radixes)?;
    }
    let pairs: Vec<(Algorithm, Algorithm)> = algorithms
        .iter()
        .enumerate()
        .flat_map(|(i, &a)| algorithms[i + 1..].iter().map(move |&b| (a, b)))
        .collect();
    thread::scope(|scope| {
        let handles: Vec<_> = pairs
            .iter()
            .map(|&(a, b)| {
                scope.spawn(move || -> Result<DivergenceReport> {
                    let left: BoxedGenerator = a.build(radixes)?;
                    let right: BoxedGenerator = b.build(radixes)?;
                    verify_equal(left, right)
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("verification thread panicked"))
            .collect()
    })
}

/// One named check and its outcome.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckRecord {
    pub fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }
}

impl fmt::Display for CheckRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{tag} {}: {}", self.name, self.detail)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    pub records: Vec<CheckRecord>,
}

impl LemmaReport {
    pub fn passed(&self) -> bool {
        self.records.iter().all(|r| r.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.records.iter().filter(|r| !r.passed)
    }

    fn push(&mut self, record: CheckRecord) {
        self.records.push(record);
    }

    /// One line per check.
    pub fn to_text(&self) -> String {
        self.records.iter().map(|r| format!("{r}\n")).collect()
    }

    /// One JSON object per line.
    pub fn to_json_lines(&self) -> String {
        self.records
            .iter()
            .map(|r| serde_json::to_string(r).expect("record serializes") + "\n")
            .collect()
    }
}

/// Violations seen while replaying a tower run.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TowerCheck {
    pub moves: u64,
    pub illegal_states: u64,
    /// Moves of `D_k`, `k >= 2`, while `D_1..D_{k-1}` were spread over
    /// several pegs.
    pub split_moves: u64,
    pub first_violation: Option<String>,
}

impl TowerCheck {
    pub fn clean(&self) -> bool {
        self.illegal_states == 0 && self.split_moves == 0
    }
}

fn peg_of_each_disk(snapshot: &[Vec<usize>], n: usize) -> Vec<usize> {
    let mut pos = vec![usize::MAX; n + 1];
    for (k, stack) in snapshot.iter().enumerate() {
        for &d in stack {
            if d <= n {
                pos[d] = k;
            }
        }
    }
    pos
}

fn stacks_legal(snapshot: &[Vec<usize>]) -> bool {
    snapshot.iter().all(|s| s.windows(2).all(|w| w[0] > w[1]))
}

/// Replays a tower generator to the end, checking the stacking rule after
/// every move and that all disks smaller than the moved one share a peg.
pub fn check_tower_run<G: GrayGenerator>(mut generator: G) -> Result<TowerCheck> {
    let n = generator.radixes().len();
    let mut before = generator.tower_snapshot().ok_or_else(|| {
        GrayError::OutOfRange(format!("{} is not a tower generator", generator.name()))
    })?;
    let mut check = TowerCheck::default();
    if !stacks_legal(&before) {
        check.illegal_states += 1;
        check.first_violation = Some("initial board illegal".into());
    }
    while let Some(event) = generator.advance()? {
        check.moves += 1;
        let k = event.position;
        let pos = peg_of_each_disk(&before, n);
        if k >= 2 && pos[1..k].iter().any(|&p| p != pos[1]) {
            check.split_moves += 1;
            check.first_violation.get_or_insert_with(|| {
                format!("move {} of D{k} with smaller disks on pegs {:?}", check.moves, &pos[1..k])
            });
        }
        let after = generator.tower_snapshot().expect("tower generator");
        if !stacks_legal(&after) {
            check.illegal_states += 1;
            check
                .first_violation
                .get_or_insert_with(|| format!("illegal board after move {}", check.moves));
        }
        before = after;
    }
    Ok(check)
}

fn tower_record(name: &str, result: Result<TowerCheck>) -> CheckRecord {
    match result {
        Ok(c) if c.clean() => CheckRecord::new(
            format!("tower-legality+same-peg[{name}]"),
            true,
            format!("{} moves", c.moves),
        ),
        Ok(c) => CheckRecord::new(
            format!("tower-legality+same-peg[{name}]"),
            false,
            format!(
                "{} illegal, {} split; first: {}",
                c.illegal_states,
                c.split_moves,
                c.first_violation.unwrap_or_default()
            ),
        ),
        Err(e) => CheckRecord::new(format!("tower-legality+same-peg[{name}]"), false, e.to_string()),
    }
}

/// Degree of every state of the Towers of Bucharest with `n` disks: two
/// legal moves, except one when all disks are on `P0` or all on `P2`.
pub fn bucharest_degrees(n: usize) -> CheckRecord {
    let total = 3usize.pow(n as u32);
    let mut exceptions = 0u64;
    let mut first = None;
    for code in 0..total {
        let mut rest = code;
        let digits: Vec<u32> = (0..n)
            .map(|_| {
                let d = (rest % 3) as u32;
                rest /= 3;
                d
            })
            .collect();
        let word = GrayWord::from_digits(digits);
        let board = bucharest_board(&word).expect("ternary word");
        let extreme = n > 0 && (word.digits().iter().all(|&d| d == 0) || word.digits().iter().all(|&d| d == 2));
        let expected = if n == 0 { 0 } else if extreme { 1 } else { 2 };
        let got = bucharest_moves(&board).len();
        if got != expected {
            exceptions += 1;
            first.get_or_insert_with(|| format!("{word}: {got} moves, expected {expected}"));
        }
    }
    CheckRecord::new(
        format!("bucharest-degree[n={n}]"),
        exceptions == 0,
        first.unwrap_or_else(|| format!("{total} states")),
    )
}

/// Limits for [`assert_lemmas_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LemmaConfig {
    pub max_words: u64,
    pub towers: bool,
}

impl Default for LemmaConfig {
    fn default() -> Self {
        Self {
            max_words: DEFAULT_MAX_WORDS,
            towers: true,
        }
    }
}

/// Runs every applicable lemma check over full runs for `radixes`.
pub fn assert_lemmas(radixes: &RadixVector) -> Result<LemmaReport> {
    assert_lemmas_with(radixes, &LemmaConfig::default())
}

pub fn assert_lemmas_with(radixes: &RadixVector, config: &LemmaConfig) -> Result<LemmaReport> {
    let n = radixes.len();
    if n == 0 {
        return Err(GrayError::EmptyWord { algorithm: "lemma checks" });
    }
    let total = radixes
        .word_count()
        .filter(|&t| t <= config.max_words)
        .ok_or_else(|| {
            GrayError::OutOfRange(format!("more than {} words; raise the cap", config.max_words))
        })?;
    let mut report = LemmaReport::default();

    // Ruler values past N use an extra radix-2 digit, as the producer does.
    let mut extended = radixes.as_slice().to_vec();
    extended.push(2);
    let extended = RadixVector::new(extended)?;

    let mut variants = vec![Variant::Standard, Variant::StepPrime];
    if radixes.as_slice().iter().all(|&m| m == 2) {
        variants.push(Variant::Binary);
    }
    for variant in variants {
        work_ahead_lemmas(&mut report, variant, radixes, &extended, total)?;
    }
    step_sum_lemmas(&mut report, radixes, total);

    if config.towers {
        let all_odd = radixes.as_slice().iter().all(|&m| m % 2 == 1);
        match radixes.uniform_radix() {
            Some(m) if m % 2 == 1 => {
                report.push(tower_record("odd", odd_generator(m, n).and_then(check_tower_run)));
            }
            Some(m) => {
                report.push(tower_record("even", even_generator(m, n).and_then(check_tower_run)));
                report.push(tower_record(
                    "even-intervals",
                    even_intervals_generator(m, n).and_then(check_tower_run),
                ));
            }
            None => {}
        }
        if all_odd {
            report.push(tower_record(
                "odd-compressed",
                odd_compressed_generator(radixes.clone()).and_then(check_tower_run),
            ));
        }
    }
    Ok(report)
}

fn work_ahead_lemmas(
    report: &mut LemmaReport,
    variant: Variant,
    radixes: &RadixVector,
    extended: &RadixVector,
    total: u64,
) -> Result<()> {
    let mut g = WorkAhead::new(variant, radixes.clone())?.with_trace();
    let name = g.name();
    let mut oracle = reflected_sequence(radixes.clone());
    let mut run_error = None;
    let mut mismatch = None;
    let mut words = 1u64;
    loop {
        if g.current() != oracle.current() && mismatch.is_none() {
            mismatch = Some(words - 1);
        }
        match g.advance() {
            Ok(Some(_)) => {
                words += 1;
                oracle.advance()?;
            }
            Ok(None) => break,
            Err(e) => {
                run_error = Some(e);
                break;
            }
        }
    }
    let trace = g.trace().cloned().unwrap_or_default();

    let empty_pops = trace.consumed.iter().filter(|&&(occ, _)| occ == 0).count();
    let not_empty = run_error.is_none() && empty_pops == 0;
    report.push(CheckRecord::new(
        format!("queue-not-empty[{name}]"),
        not_empty,
        match &run_error {
            Some(e) => e.to_string(),
            None => format!(
                "min occupancy at consumption {}",
                trace.consumed.iter().map(|c| c.0).min().unwrap_or(0)
            ),
        },
    ));

    report.push(CheckRecord::new(
        format!("capacity[{name}]"),
        g.max_occupancy() <= g.capacity() && run_error.is_none(),
        format!("max occupancy {} of {}", g.max_occupancy(), g.capacity()),
    ));

    report.push(CheckRecord::new(
        format!("oracle-equality[{name}]"),
        run_error.is_none() && mismatch.is_none() && words == total,
        match mismatch {
            Some(i) => format!("first mismatch at word {i}"),
            None => format!("{words} of {total} words"),
        },
    ));

    let mut bad_append = None;
    for (k, &v) in trace.appended.iter().enumerate() {
        let k = k as u64 + 1;
        if k > 2 * total || ruler_bar(k, extended)? != v {
            bad_append = Some((k, v));
            break;
        }
    }
    report.push(CheckRecord::new(
        format!("append-sequence[{name}]"),
        bad_append.is_none(),
        match bad_append {
            Some((k, v)) => format!("append #{k} was {v}"),
            None => format!("{} appends follow the ruler sequence", trace.appended.len()),
        },
    ));

    match variant {
        Variant::StepPrime => {
            let left = g.remaining_at_termination();
            report.push(CheckRecord::new(
                format!("no-unused-entries[{name}]"),
                left == Some(0),
                format!("entries left at termination: {left:?}"),
            ));
        }
        _ => {
            let last = trace.appended.last().copied();
            let allowed = [ruler_bar(total, extended)?, ruler_bar(total + 1, extended)?];
            report.push(CheckRecord::new(
                format!("overrun[{name}]"),
                last.is_some_and(|v| allowed.contains(&v)),
                format!("last append {last:?}, allowed {allowed:?}"),
            ));
        }
    }
    Ok(())
}

fn step_sum_lemmas(report: &mut LemmaReport, radixes: &RadixVector, total: u64) {
    let n = radixes.len() as i64;
    let mut direct = 0u64;
    let mut left_bound = None;
    let mut closed = None;
    let mut interval = None;
    // min over k' <= k of S(k') - 2k', with S(0) = 0
    let mut min_offset = 0i64;
    for k in 1..=total {
        direct += ruler_bar(k, radixes).expect("k in range") as u64;
        if closed.is_none() && direct != step_sum_closed_form(k, radixes) {
            closed = Some(k);
        }
        if left_bound.is_none() && direct > 2 * k {
            left_bound = Some(k);
        }
        let offset = direct as i64 - 2 * k as i64;
        if interval.is_none() && offset - min_offset > n - 1 {
            interval = Some(k);
        }
        min_offset = min_offset.min(offset);
    }
    report.push(CheckRecord::new(
        "step-sum-closed-form",
        closed.is_none(),
        closed.map_or_else(|| format!("k = 1..{total}"), |k| format!("differs at k = {k}")),
    ));
    report.push(CheckRecord::new(
        "step-sum-left-bound",
        left_bound.is_none(),
        left_bound.map_or_else(|| "S(k) <= 2k".into(), |k| format!("S({k}) > {}", 2 * k)),
    ));
    report.push(CheckRecord::new(
        "step-sum-interval-bound",
        interval.is_none(),
        interval.map_or_else(
            || "S(k) - S(k') <= 2(k - k') + n - 1".into(),
            |k| format!("violated ending at k = {k}"),
        ),
    ));
    if radixes.as_slice().iter().all(|&m| m == 2) {
        report.push(CheckRecord::new(
            "step-sum-binary",
            direct == 2 * total - 1,
            format!("S({total}) = {direct}"),
        ));
    }
}

/// Per-advance cost of one run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CostSummary {
    pub algorithm: String,
    pub n: usize,
    pub advances: u64,
    pub max_ops: u64,
    pub mean_ops: f64,
    /// Whether the run reached the end of the sequence.
    pub complete: bool,
}

/// Runs `generator` to the end, or for at most `limit` advances, and reads
/// its op counter.
pub fn profile<G: GrayGenerator>(mut generator: G, limit: Option<u64>) -> Result<CostSummary> {
    let mut complete = false;
    let mut steps = 0u64;
    while limit.is_none_or(|l| steps < l) {
        steps += 1;
        if generator.advance()?.is_none() {
            complete = true;
            break;
        }
    }
    let ops = generator.ops();
    Ok(CostSummary {
        algorithm: generator.name().to_string(),
        n: generator.radixes().len(),
        advances: ops.advances(),
        max_ops: ops.max_per_advance(),
        mean_ops: ops.mean_per_advance(),
        complete,
    })
}
