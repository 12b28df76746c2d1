//! Multiset operations and the two binary maps on a few partitions.

use selfsim::partition::{bin, Overpartition, Partition};

fn main() -> selfsim::Result<()> {
    let lambda: Partition = "7+4+4+4+2+1+1".parse()?;
    let mu: Partition = "4+2+1+1".parse()?;
    println!("{lambda} minus {mu} = {}", lambda.subtract(&mu)?);
    println!("{mu} union {mu} = {}", mu.union(&mu));
    println!("scale by 3: {}", mu.scale(3));
    println!("add 1 to the first part: {}", mu.add11());
    println!("add 2 to the largest odd part of 5+2: {}", "5+2".parse::<Partition>()?.o_plus_2()?);

    let p: Partition = "12+6+1+1+1".parse()?;
    println!("rep2({p}) = {}", p.rep2());
    println!("bin({p}) = {}", p.bin_map());
    println!("merge equal parts of {} = {}", p.rep2(), p.rep2().merge_equal());
    println!("valuations of 40+12+6+4+4+3+1+1: {:?}", "40+12+6+4+4+3+1+1".parse::<Partition>()?.valuation_profile().values());
    println!("bin(45) = {}", bin(45));

    // overlined parts carry a trailing `*`
    let o: Overpartition = "8*+8+8+4*+2*+2+2+2+2+1+1+1+1+1+1+1".parse()?;
    println!("{o}: weight {}, overlined {:?}", o.weight(), o.overlined().collect::<Vec<_>>());
    println!("{}", serde_json::to_string(&o).expect("serializable"));
    Ok(())
}
