//! Work-ahead buffering of the lexicographic odometer: each advance does a
//! bounded slice of odometer work and consumes one buffered position.

use loopless_gray::workahead::{binary_buffer_capacity, buffer_capacity, Variant, WorkAhead};
use loopless_gray::{GrayGenerator, RadixVector};

fn main() -> loopless_gray::Result<()> {
    let list = std::env::args().nth(1).unwrap_or_else(|| "2,5,4,2".into());
    let radixes = RadixVector::parse_msb_first(&list)?;
    println!("radixes {list}, buffer capacity {}", buffer_capacity(radixes.len()));

    for variant in [Variant::Standard, Variant::StepPrime] {
        let mut g = WorkAhead::new(variant, radixes.clone())?.with_trace();
        let mut words = 1;
        while g.advance()?.is_some() {
            words += 1;
        }
        let trace = g.trace().expect("trace enabled");
        println!(
            "{}: {words} words, max occupancy {}, appended {:?}..",
            g.name(),
            g.max_occupancy(),
            &trace.appended[..trace.appended.len().min(12)]
        );
    }

    let n = 6;
    let mut g = WorkAhead::new(Variant::Binary, RadixVector::uniform(2, n)?)?;
    while g.advance()?.is_some() {}
    println!(
        "binary n={n}: capacity {}, max occupancy {}",
        binary_buffer_capacity(n),
        g.max_occupancy()
    );
    Ok(())
}
