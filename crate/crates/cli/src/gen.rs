use std::path::PathBuf;

use bchroma::edgelist::{emit_arclist, emit_edgelist};
use bchroma::families::{
    chithra, edge_joint, edge_set_graph, jaco, ornated, rasta_digraph, set_graph, ChithraSpec,
    Classic, EdgeSetAdjacency, FamilyError, JacoParams, OrnatedString, RastaSpec,
};
use bchroma::{Digraph, Graph, VertexId, VertexSet};
use clap::Args;

use crate::io::{check_output, read_graph, write_atomic, CliResult, Failure};

const FAMILIES: &str =
    "path, cycle, complete, complete-bipartite, edgeless, wheel, sunlet, sun, helm, \
                        jaco, ornated, rasta, setgraph, edgesetgraph, chithra, edgejoint";

#[derive(Debug, Args)]
pub struct GenArgs {
    /// Family name
    family: String,
    /// Numeric family parameters, e.g. `jaco 5 1 0` for n, m, c
    params: Vec<usize>,
    /// Edge-list output; digraph families also write `<out>.arcs`
    #[arg(short, long)]
    out: Option<PathBuf>,
    /// Input graph for edgesetgraph and chithra; give two for edgejoint
    #[arg(long)]
    input: Vec<PathBuf>,
    /// Chithra attachment set as comma-separated vertices, one flag per new vertex
    #[arg(long = "w")]
    w: Vec<String>,
    /// Allow chithra attachment sets that do not cover the base
    #[arg(long)]
    partial: bool,
    /// Edge-joint endpoint in the first input
    #[arg(long)]
    v: Option<usize>,
    /// Edge-joint endpoint in the second input
    #[arg(long)]
    u: Option<usize>,
    /// Edge-set graph: subsets sharing an edge are also adjacent
    #[arg(long)]
    shared_edge_adjacent: bool,
}

fn arity(family: &'static str, expected: usize, got: usize) -> Failure {
    Failure::input(FamilyError::Arity {
        family,
        expected,
        got,
    })
}

fn one_input(args: &GenArgs, family: &str) -> CliResult<Graph> {
    match args.input.as_slice() {
        [path] => read_graph(path),
        other => Err(Failure::input(format!(
            "{family} needs exactly one --input, got {}",
            other.len()
        ))),
    }
}

fn parse_subset(spec: &str) -> CliResult<VertexSet> {
    spec.split(',')
        .map(|t| match t.trim().parse::<usize>() {
            Ok(v) if v >= 1 => Ok(VertexId::new(v)),
            _ => Err(Failure::input(format!(
                "--w {spec:?}: expected comma-separated vertices >= 1"
            ))),
        })
        .collect()
}

fn build(args: &GenArgs) -> CliResult<(Graph, Option<Digraph>)> {
    let p = &args.params;
    let family = args.family.as_str();
    let digraph = |d: Digraph| (d.underlying(), Some(d));
    let out = match family {
        "jaco" => match p.as_slice() {
            &[n, m, c] => digraph(
                jaco(&JacoParams::new(n, m, c).map_err(Failure::input)?).map_err(Failure::input)?,
            ),
            _ => return Err(arity("jaco", 3, p.len())),
        },
        "ornated" => {
            let [n, entries @ ..] = p.as_slice() else {
                return Err(arity("ornated", 2, p.len()));
            };
            let s = OrnatedString::new(entries.to_vec()).map_err(Failure::input)?;
            digraph(ornated(*n, &s).map_err(Failure::input)?)
        }
        "rasta" => {
            let spec = RastaSpec::new(p.clone()).map_err(Failure::input)?;
            digraph(rasta_digraph(&spec).map_err(Failure::input)?)
        }
        "setgraph" => match p.as_slice() {
            &[n] => (set_graph(n).map_err(Failure::input)?, None),
            _ => return Err(arity("setgraph", 1, p.len())),
        },
        "edgesetgraph" => {
            let mode = if args.shared_edge_adjacent {
                EdgeSetAdjacency::SharedEdge
            } else {
                EdgeSetAdjacency::Strict
            };
            (
                edge_set_graph(&one_input(args, family)?, mode).map_err(Failure::input)?,
                None,
            )
        }
        "chithra" => {
            let base = one_input(args, family)?;
            let subsets = args
                .w
                .iter()
                .map(|w| parse_subset(w))
                .collect::<CliResult<Vec<_>>>()?;
            let spec = if args.partial {
                ChithraSpec::partial(base, subsets)
            } else {
                ChithraSpec::new(base, subsets)
            }
            .map_err(Failure::input)?;
            (chithra(&spec).map_err(Failure::input)?, None)
        }
        "edgejoint" => {
            let [g, h] = args.input.as_slice() else {
                return Err(Failure::input(format!(
                    "edgejoint needs two --input files, got {}",
                    args.input.len()
                )));
            };
            let (Some(v), Some(u)) = (args.v, args.u) else {
                return Err(Failure::input("edgejoint needs --v and --u"));
            };
            if v == 0 || u == 0 {
                return Err(Failure::input("vertices are numbered from 1"));
            }
            let (g, h) = (read_graph(g)?, read_graph(h)?);
            (
                edge_joint(&g, VertexId::new(v), &h, VertexId::new(u)).map_err(Failure::input)?,
                None,
            )
        }
        name if Classic::NAMES.contains(&name) || name == "complete_bipartite" => (
            Classic::from_name(name, p)
                .and_then(|c| c.build())
                .map_err(Failure::input)?,
            None,
        ),
        other => {
            return Err(Failure::input(format!(
                "unknown family {other:?}; expected one of {FAMILIES}"
            )))
        }
    };
    Ok(out)
}

pub fn run(args: &GenArgs) -> CliResult {
    if let Some(out) = &args.out {
        check_output(out)?;
    }
    let (g, arcs) = build(args)?;
    let summary = match &arcs {
        Some(d) => format!(
            "{} vertices, {} edges, {} arcs",
            g.order(),
            g.size(),
            d.arc_count()
        ),
        None => format!("{} vertices, {} edges", g.order(), g.size()),
    };
    match &args.out {
        Some(out) => {
            write_atomic(out, &emit_edgelist(&g))?;
            if let Some(d) = &arcs {
                let mut sidecar = out.clone().into_os_string();
                sidecar.push(".arcs");
                write_atomic(&PathBuf::from(sidecar), &emit_arclist(d))?;
            }
            println!("{summary}");
        }
        None => {
            print!("{}", emit_edgelist(&g));
            eprintln!("{summary}");
        }
    }
    Ok(())
}
