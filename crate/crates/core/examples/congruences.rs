//! Sweep every registered congruence to 10^4 in modular arithmetic.

use selfsim::verify::{registry, Verifier};

fn main() {
    let v = Verifier::new();
    for check in registry() {
        let r = v.run(check, 10_000);
        println!("{r}  [{}]", check.statement);
        if let Some(note) = check.note {
            println!("    note: {note}");
        }
    }
}
