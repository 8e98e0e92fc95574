//! Cross-checks every applicable generator against the oracle and runs the
//! invariant suite.

use loopless_gray::harness::{assert_lemmas, verify_all};
use loopless_gray::{Algorithm, RadixVector};

fn main() -> loopless_gray::Result<()> {
    let r = RadixVector::uniform(3, 4)?;
    let algorithms: Vec<Algorithm> = Algorithm::ALL
        .into_iter()
        .filter(|a| a.build(&r).is_ok())
        .collect();
    for report in verify_all(&algorithms, &r)? {
        println!("{report}");
    }

    let report = assert_lemmas(&r)?;
    print!("{}", report.to_text());
    println!("all passed: {}", report.passed());
    Ok(())
}
