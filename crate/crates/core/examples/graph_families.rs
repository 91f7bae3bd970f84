// Build the standard multigraph families and inspect their block structure.

use dpcolor::multigraph::{block_surgery, make_family, BlockFamily, Family, Multigraph};

fn describe(name: &str, g: &Multigraph) {
    let c = g.classify_gdp();
    println!(
        "{name}: {} vertices, {} edges, excess {}, GDP-tree {}, Gallai tree {}",
        g.vertex_count(),
        g.edge_count(),
        g.excess(),
        c.is_gdp_tree(),
        c.is_gallai_tree()
    );
    for comp in &c.components {
        for (block, family) in &comp.blocks {
            let tag = match family {
                BlockFamily::Clique { t, s } => format!("K_{t}^{s}"),
                BlockFamily::Cycle { t, s } => format!("C_{t}^{s}"),
                BlockFamily::Neither => "irregular".to_string(),
            };
            println!(
                "  block {block:?} is {tag}, regularity {:?}",
                family.regularity()
            );
        }
    }
}

fn main() {
    let k24 = make_family(&Family::CliqueMultiple { t: 2, q: 4 }).unwrap();
    let c52 = make_family(&Family::CycleMultiple { n: 5, q: 2 }).unwrap();
    let k5 = make_family(&Family::CliqueMultiple { t: 5, q: 1 }).unwrap();
    let path = Multigraph::simple(2, &[(0, 1)]).unwrap();
    let k33 = make_family(&Family::Blowup { graph: path, q: 3 }).unwrap();
    describe("K_2^4", &k24);
    describe("C_5^2", &c52);
    describe("K_5", &k5);
    describe("K_3,3", &k33);

    // Two triangles sharing a vertex, with a pendant C_4 attached by a bridge.
    let g = Multigraph::simple(
        9,
        &[
            (0, 1),
            (1, 2),
            (0, 2),
            (2, 3),
            (3, 4),
            (2, 4),
            (4, 5),
            (5, 6),
            (6, 7),
            (7, 8),
            (8, 5),
        ],
    )
    .unwrap();
    describe("bowtie with a pendant square", &g);
    let eb = g.edge_blocks();
    println!("  cut edges {:?}", eb.cut_edges);
    for b in &eb.edge_blocks {
        println!(
            "  edge-block {:?} cut-edge={} pendent={}",
            b.vertices, b.is_cut_edge, b.pendent
        );
    }

    let c6 = make_family(&Family::CycleMultiple { n: 6, q: 1 }).unwrap();
    let shortcut = block_surgery(&c6, &[1, 2], 0, 3).unwrap();
    println!(
        "C_6 with the path 1-2 cut out and 0-3 joined: {} vertices, {} edges",
        shortcut.vertex_count(),
        shortcut.edge_count()
    );
    println!(
        "skeleton of C_5^2 has {} edges",
        c52.skeleton().edge_count()
    );
}
