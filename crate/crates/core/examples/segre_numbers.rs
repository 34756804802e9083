use segre::algebra::Ring;
use segre::vogel::{fixed_support, polar_at, segre_at, vogel_trials};
use segre::{AffinePoint, IdealRep, TrialConfig};

fn main() -> segre::Result<()> {
    // f = t3·(t1, t2, t3): a fixed divisor plus moving curves
    let r = Ring::new(["t1", "t2", "t3"])?;
    let f = r.parse_list("t3*t1, t3*t2, t3^2")?;
    let space = IdealRep::zero(3);
    let origin = AffinePoint::origin(3);
    let cfg = TrialConfig::default();

    let e = segre_at(&f, &space, &origin, &cfg)?;
    println!("segre numbers {} (stable: {})", e.value, e.stable);
    let m = polar_at(&f, &space, &origin, &cfg)?;
    println!("polar multiplicities {}", m.value);

    for run in vogel_trials(&f, &space, &origin, &cfg)? {
        let h: Vec<String> = run.sequence.elements.iter().map(|g| r.format(g)).collect();
        println!(
            "  h = {h:?}: Z-part {} off-part {}",
            run.mult_z, run.mult_off
        );
    }

    let fixed = fixed_support(&f, &space, &cfg)?;
    for c in &fixed.codims {
        let support: Vec<String> = c.sum.grevlex_basis().iter().map(|g| r.format(g)).collect();
        println!(
            "codim {}: fixed {} support {support:?} kinds {:?}",
            c.codim, c.is_fixed, c.kinds
        );
    }
    Ok(())
}
