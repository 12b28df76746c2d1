//! Filter all partitions by each family's description and compare with the
//! recursive construction.

use selfsim::family::{build_family, FamilyId};
use selfsim::verify::{oracle_family, Oracle};

fn main() -> selfsim::Result<()> {
    let filtered = oracle_family(FamilyId::Sf, 5)?;
    println!("SF(5) by filter: {}", filtered.to_strings().join(", "));
    println!("same as built: {}", filtered.same_members(&*build_family(FamilyId::Sf, 5)?));

    let oracle = Oracle::new(24);
    for fid in FamilyId::ALL {
        println!("{}", oracle.check(fid, 24)?);
    }
    Ok(())
}
