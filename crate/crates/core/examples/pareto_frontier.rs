//! Maintaining an antichain of Betti vectors, as the DP does in mode `all`.

use maxbetti::{pareto_insert, ValueVector};

fn main() {
    let candidates = [[3, 5, 2], [4, 4, 2], [3, 4, 2], [4, 5, 1], [4, 4, 2], [2, 6, 3]];
    let mut frontier: Vec<(ValueVector, Vec<usize>)> = Vec::new();
    for (i, c) in candidates.iter().enumerate() {
        let kept = pareto_insert(&mut frontier, ValueVector(c.to_vec()), vec![i], |w, mut more| w.append(&mut more));
        println!("insert {c:?}: {}", if kept { "kept" } else { "dominated" });
    }
    for (v, sources) in &frontier {
        println!("maximal {:?} from candidates {sources:?}", v.components());
    }
}
