//! One-tangles, two-tangles, residuals and the pi-tangle at a single point.
//!
//!     cargo run --example tangles -- 0.785398 0.25

use rindler_ghz::channels::{ChannelKind, CouplingConfig};
use rindler_ghz::rindler::AccelParam;
use rindler_ghz::tangles::full_report;

fn main() -> rindler_ghz::Result<()> {
    let args: Vec<f64> = std::env::args()
        .skip(1)
        .map(|s| s.parse().expect("numeric argument"))
        .collect();
    let (r, p) = match args[..] {
        [r, p] => (r, p),
        _ => (std::f64::consts::FRAC_PI_4, 0.25),
    };
    for kind in ChannelKind::ALL {
        let rep = full_report(AccelParam::new(r)?, &CouplingConfig::collective(kind, p)?)?;
        println!("{kind} (collective, r = {r}, p = {p})");
        println!(
            "  one-tangles  A|BC {:.9}  B|AC {:.9}  C|AB {:.9}",
            rep.n_a_bc, rep.n_b_ac, rep.n_c_ab
        );
        println!(
            "  two-tangles  AB {:.2e}  AC {:.2e}  BC {:.2e}",
            rep.n_ab, rep.n_ac, rep.n_bc
        );
        println!("  residuals    {:.9}  {:.9}  {:.9}", rep.pi_a, rep.pi_b, rep.pi_c);
        println!("  pi-tangle    {:.9}", rep.pi_tangle);
    }
    Ok(())
}
