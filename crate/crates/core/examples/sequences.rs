//! Print the first values of every sequence, then a short b-file.

use selfsim::sequence::{seq_range, seq_value, seq_value_mod, write_bfile, SequenceId};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for id in SequenceId::ALL {
        let lo = id.min_index();
        let values: Vec<String> = seq_range(id, lo, lo + 15)?.iter().map(|v| v.to_string()).collect();
        println!("{:>8} from {lo}: {}", id.tag(), values.join(", "));
    }

    // exact values are big integers; residues come from a separate modular table
    let n = 1_000_003;
    println!("sp({n}) = {}", seq_value(SequenceId::Sp, n)?);
    println!("sp({n}) mod 7 = {}", seq_value_mod(SequenceId::Sp, n, 7)?);

    let mut out = std::io::stdout().lock();
    write_bfile(SequenceId::Sb, 0, 9, &mut out)?;
    Ok(())
}
