// Read and write graph6, multigraph documents and cover files.

use dpcolor::cover::{hard_cover, HardFamily};
use dpcolor::io::{
    read_cover, read_graph6, read_graph6_lines, read_multigraph, write_cover, write_graph6,
    write_multigraph, MultigraphDocument,
};
use dpcolor::multigraph::Multigraph;

fn main() {
    let k5 = read_graph6("D~{").unwrap();
    println!(
        "D~{{ has {} vertices and {} edges",
        k5.vertex_count(),
        k5.edge_count()
    );
    let several = read_graph6_lines(">>graph6<<Cr\nBw\n").unwrap();
    println!(
        "read {} graphs; first re-encodes as {}",
        several.len(),
        write_graph6(&several[0]).unwrap()
    );

    let doc = MultigraphDocument {
        graph: Multigraph::new(3, &[(0, 1, 2), (1, 2, 1)]).unwrap(),
        h: Some(vec![3, 3, 1]),
    };
    let text = write_multigraph(&doc);
    print!("{text}");
    println!(
        "round trip equal: {}",
        read_multigraph(&text).unwrap() == doc
    );

    let cover = hard_cover(HardFamily::EvenCycle, 2, 1).unwrap();
    let text = write_cover(&cover);
    print!("{text}");
    println!(
        "cover round trip equal: {}",
        read_cover(&text).unwrap() == cover
    );

    match read_multigraph("{\"n\": 2,\n \"edges\": [[0, 0, 1]]}") {
        Ok(_) => println!("unexpectedly accepted a loop"),
        Err(e) => println!("rejected: {e}"),
    }
}
