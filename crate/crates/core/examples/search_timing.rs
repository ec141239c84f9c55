// temporary timing harness
fn main() {
    let t0 = std::time::Instant::now();
    let without = floquet_vortex::search_optimal(1000, false).unwrap();
    println!("novortex search: {:?}", t0.elapsed());
    for r in &without {
        println!("D={} N={} configs={}", r.distance, r.n_min, r.configs.len());
    }
    let t1 = std::time::Instant::now();
    let with = floquet_vortex::search_optimal(1000, true).unwrap();
    println!("vortex search: {:?}", t1.elapsed());
    for r in &with {
        println!("D={} N={} configs={}", r.distance, r.n_min, r.configs.len());
    }
}
