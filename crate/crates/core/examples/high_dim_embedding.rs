//! A 200-d function that only depends on two coordinates, searched through
//! sequential random embeddings.

use zeroth::bench::functions::lowdim_sphere;
use zeroth::{opt_min, Dimension, EmbeddingConfig, Objective, Parameter};

fn main() -> zeroth::Result<()> {
    let dim = Dimension::continuous(200, -1.0, 1.0)?;
    let f = |x: &[f64]| lowdim_sphere(x, 2);

    let mut plain = Objective::new(dim.clone(), f);
    let direct = opt_min(&mut plain, &Parameter::new(3000).with_seed(4))?;

    let mut embedded = Objective::new(dim, f);
    let parameter = Parameter::new(3000).with_seed(4).with_embedding(EmbeddingConfig::new(4).with_stages(5));
    let via_sre = opt_min(&mut embedded, &parameter)?;

    println!("plain sracos     {:.5}", direct.score());
    println!("random embedding {:.5}", via_sre.score());
    Ok(())
}
