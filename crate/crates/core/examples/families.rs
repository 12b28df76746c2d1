//! Build families recursively and compare them with their counting sequences.

use selfsim::family::{build_family, build_over_family, is_member, total_parts, FamilyId};
use selfsim::sequence::seq_value;

fn main() -> selfsim::Result<()> {
    for fid in [FamilyId::St, FamilyId::Spa, FamilyId::Sp, FamilyId::Sb] {
        let set = build_family(fid, 9)?;
        println!("{fid}(9) = {{{}}}", set.to_strings().join(", "));
    }

    let big = build_family(FamilyId::St, 71)?;
    println!("|ST(71)| = {}, st(71) = {}", big.len(), seq_value(selfsim::sequence::SequenceId::St, 71)?);
    println!("parts in ST(7): {}", total_parts(FamilyId::St, 7)?);

    let over = build_over_family(FamilyId::ObBarDag, 7)?;
    println!("OBbar_dag(7) = {{{}}}", over.to_strings().join(", "));

    let l = "8+3".parse()?;
    println!("8+3 in SNc: {}", is_member(FamilyId::Snc, &l));
    Ok(())
}
