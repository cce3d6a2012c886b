//! Reading and writing graph6, and the degree facts the checks lean on.

use fanforge::graph::{delete_vertex, from_graph6, petersen, read_graph6_lines, to_graph6};

fn main() {
    let g = petersen();
    let line = to_graph6(&g);
    println!("Petersen as graph6: {line}");
    assert_eq!(to_graph6(&from_graph6(&line).unwrap()), line);

    let h = delete_vertex(&g, 0).unwrap();
    let p = h.degree_profile();
    println!("Petersen − v: n={} |E|={} Δ={} degrees {:?}", h.n(), h.edge_count(), p.delta, p.degrees);
    println!("  Δ-vertices {:?}, light {:?}", p.delta_vertices, h.light_vertices());
    println!("  Δ-core degrees {}..{}", p.core_min_degree, p.core_max_degree);

    // a corpus with a header, a blank and a broken line
    let text = ">>graph6<<Dhc\n\nCr\n!!\n";
    for (line, body, parsed) in read_graph6_lines(text) {
        match parsed {
            Ok(g) => println!("line {line}: {body} has {} edges", g.edge_count()),
            Err(e) => println!("line {line}: {body} rejected ({e})"),
        }
    }
}
