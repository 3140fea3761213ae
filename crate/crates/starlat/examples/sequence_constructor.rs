//! The sequence constructor: from a rational basis and limit ratios,
//! manufacture primitive targets n(t) with gcd 1 whose ratio vectors and
//! scaled bases converge as prescribed. Prints the direction identities and
//! the exact t-scaled error columns.
//!
//! ```bash
//! cargo run --example sequence_constructor
//! ```

use starlat::construct::{find_admissible, prepare, verify_asymptotics, verify_identities};
use starlat::exact::{rat, RationalMatrix};

fn main() {
    let params = prepare(RationalMatrix::identity(2), vec![rat(1, 2), rat(3, 4)]).unwrap();
    println!("basis = I2, ratios = (1/2, 3/4), d = {}", params.d);

    let identities = verify_identities(&params).unwrap();
    println!(
        "direction identities: last minor |{}| = |det b*|, weighted minors {:?}",
        identities.last_minor.0,
        identities
            .weighted
            .iter()
            .map(|(a, _)| a.to_string())
            .collect::<Vec<_>>()
    );

    let run = find_admissible(&params, 6, 60, 2).unwrap();
    println!(
        "accepted t values {:?} with perturbation {:?} ({} candidates scanned)",
        run.points.iter().map(|p| p.t.to_string()).collect::<Vec<_>>(),
        run.tvec.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
        run.candidates_scanned
    );

    let table = verify_asymptotics(&params, &run.points).unwrap();
    println!("t-scaled error columns (all bounded):");
    println!("{:>5} {:>12} {:>12} {:>12}", "t", "e2", "e3", "e4");
    for row in &table.rows {
        println!(
            "{:>5} {:>12} {:>12} {:>12}",
            row.t.to_string(),
            row.e2.to_string(),
            row.e3.to_string(),
            row.e4.to_string()
        );
    }
    println!("bounded within factor 4 of the median: {}", table.bounded(4));
}
