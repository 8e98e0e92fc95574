//! Mixed odd radixes on three pegs: every disk carries a dial that
//! remembers its own digit.

use loopless_gray::{odd_compressed_generator, GrayGenerator, RadixVector};

fn main() -> loopless_gray::Result<()> {
    let list = std::env::args().nth(1).unwrap_or_else(|| "3,5,3".into());
    let radixes = RadixVector::parse_msb_first(&list)?;
    let mut g = odd_compressed_generator(radixes)?;
    loop {
        let marks: Vec<String> = (0..3)
            .map(|p| g.pegs().stack(p).iter().map(|d| d.mark()).collect::<Vec<_>>().join(" "))
            .collect();
        println!("{}  [{}] [{}] [{}]", g.current(), marks[0], marks[1], marks[2]);
        if g.advance()?.is_none() {
            break;
        }
    }
    Ok(())
}
