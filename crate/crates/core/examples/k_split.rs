//! k-split polynomials G^(k), the projections T_j and Ω-support.

use kschur::kspace::{expand_in_g, g_poly, g_table, omega_support, project_t};
use kschur::part;
use kschur::partition::k_rectangle;
use kschur::vertex::apply_b_partition;

fn main() -> kschur::Result<()> {
    let k = 2;
    let table = g_table(k, 4)?;
    println!(
        "G^(2) in degree 4, unitriangular: {}",
        table.is_upper_triangular() && table.unit_diagonal()
    );
    for lambda in &table.index {
        println!("  G_{lambda} = {}", g_poly(lambda, k)?.pretty());
    }

    let g = g_poly(&part![2, 1, 1], k)?;
    for j in 0..=k {
        println!("T_{j} G_(2,1,1) = {}", project_t(j, k, &g)?.pretty());
    }

    let rect = k_rectangle(1, k)?;
    let image = apply_b_partition(&rect, &g)?;
    println!("B_{rect} G_(2,1,1) has Ω-support {:?}", omega_support(&image, k)?);
    println!("coordinates: {}", expand_in_g(&image, k)?.member(k)?.pretty());
    Ok(())
}
