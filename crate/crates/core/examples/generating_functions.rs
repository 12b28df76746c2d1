//! Expand closed forms and functional-equation solutions and compare them
//! with the recurrences.

use selfsim::sequence::{SelfSimilarSpec, SequenceId};
use selfsim::series::{closed_form_series, compare_series_to_sequence, functional_residual, solve_functional, TruncatedSeries};

fn main() -> selfsim::Result<()> {
    println!("1/(1 - x^2) = {}", TruncatedSeries::geom_factor(1, 2, 8)?);
    println!("SB(x) = {}", closed_form_series(SequenceId::Sb, 12)?);

    // a spec outside the built-in list, with a negative coefficient
    let spec = SelfSimilarSpec::new(1, 2, -1, 1, 1);
    let f = solve_functional(&spec, 16);
    println!("F(x) = {f}");
    println!("residual zero: {}", functional_residual(&spec, &f)?.is_zero());

    for id in SequenceId::COUNTING {
        println!("{}", compare_series_to_sequence(id, 2048)?);
    }
    Ok(())
}
