use std::time::Instant;
use qaw_core::ortho::*;

fn main() {
    let env = Env::symbolic();
    for pair in [AdjacentPair::HermiteBig, AdjacentPair::BigAsc, AdjacentPair::AscDualQHahn] {
        let t = Instant::now();
        for n in 0..=7usize { for m in 0..=n {
            let lhs = bootstrap_mixed_moment(pair, &env, n, m).unwrap();
            let (_, s_spec) = pair.specs(&env);
            let rhs = mixed_moment_oracle(&s_spec, n, m);
            assert_eq!(lhs, rhs, "{} n={n} m={m}", pair.name());
        } }
        println!("bootstrap {} symbolic n<=7: {:.2?}", pair.name(), t.elapsed());
    }
}
