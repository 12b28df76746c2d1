//! The worked example for h_st, a few other maps, and a full verification sweep.

use selfsim::bijection::{backward, forward, verify_bijection, BijectionId, Item};

fn main() -> selfsim::Result<()> {
    let lambda = Item::Overpartition("8+8+8+8+8+4*+4+4+4+4+2+2+2+1*+1+1+1+1".parse()?);
    let mu = forward(BijectionId::HSt, &lambda)?;
    println!("h({lambda}) = {mu}");
    println!("h^-1({mu}) = {}", backward(BijectionId::HSt, &mu)?);

    for (bij, text) in [
        (BijectionId::PhiSpa, "6+3"),
        (BijectionId::ThetaSb, "5+4"),
        (BijectionId::XiSplit, "4+2+1"),
        (BijectionId::RbSt, "3+2"),
    ] {
        let x = bij.source().parse(text)?;
        println!("{bij}({x}) = {}", forward(bij, &x)?);
    }

    for bij in BijectionId::ALL {
        let checked: usize = (bij.min_n()..=40)
            .map(|n| verify_bijection(bij, n).map(|r| if r.passed() { r.checked } else { 0 }))
            .sum::<selfsim::Result<usize>>()?;
        println!("{bij}: {checked} elements mapped for n <= 40");
    }
    Ok(())
}
