use acute_core::fibonacci::{base_config, extend, ExtendOptions};
use std::time::Instant;

fn main() {
    let mut cfg = base_config();
    let mut opts = ExtendOptions::default();
    for step in 0..11 {
        let t = Instant::now();
        match extend(&cfg, &opts) {
            Ok(e) => {
                let max_den_bits = e.config.points().iter().flat_map(|p| p.coords())
                    .map(|c| c.denom().bits()).max().unwrap();
                let max_num_bits = e.config.points().iter().flat_map(|p| p.coords())
                    .map(|c| c.numer().bits()).max().unwrap();
                println!("step {:2} -> d={:2} n={:4} retries={} r={} grid={} den_bits={} num_bits={} in {:.1?}",
                    step, e.config.dim(), e.config.points().len(), e.retries, e.radius,
                    e.grid_bits, max_den_bits, max_num_bits, t.elapsed());
                opts.initial_radius = Some(e.radius.clone());
                opts.initial_grid = Some(e.grid_bits.max(12));
                cfg = e.config;
            }
            Err(err) => { println!("step {} FAILED: {} after {:.1?}", step, err, t.elapsed()); break; }
        }
    }
}
