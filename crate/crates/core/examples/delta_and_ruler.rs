//! The delta sequence: which digit changes at each step, read from the
//! odometer and from the ruler function.

use loopless_gray::{delta_sequence, ruler, ruler_bar, step_sum, RadixVector};

fn main() -> loopless_gray::Result<()> {
    let r = RadixVector::parse_msb_first("2,5,4,2")?;
    let deltas: Vec<usize> = delta_sequence(r.clone()).collect();
    println!("delta: {deltas:?}");

    for k in 1..=12 {
        println!("k={k:<3} ruler={} ruler_bar={}", ruler(k, &r)?, ruler_bar(k, &r)?);
    }

    for k in [1, 10, 40, 80] {
        let s = step_sum(k, &r)?;
        println!("S({k}) = {} (closed form {})", s.direct, s.closed_form);
    }
    Ok(())
}
