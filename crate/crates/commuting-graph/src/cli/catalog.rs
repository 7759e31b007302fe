//! The built-in group catalog: symmetric, alternating and dihedral families,
//! projective-line actions of PSL/PGL over prime fields, a hand-built 5:4
//! Frobenius group, and fixed generator sets for the groups over non-prime
//! fields. Every entry carries its expected order (asserted at build time),
//! solubility and centre flags, and the normal subgroups used by the
//! distance-outside-a-normal-subgroup checks.

use std::fmt;
use std::path::Path;

use thiserror::Error;

use crate::group::Group;
use crate::perm::Permutation;

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("unknown group '{0}'; known names: sym(n), alt(n) for 2<=n<=9, dihedral(n) for 3<=n<=32, psl2(q), pgl2(q) for prime q<=31 and q in {{8,9}}, m10, aut(alt(6)), m11, m12, psl3(4), pgl3(4), sz(8), sz(8):3, frobenius_20, or a generator file path")]
    UnknownName(String),
    #[error("{name}: parameter out of supported range ({range})")]
    UnsupportedParameter { name: String, range: String },
    #[error("group file {path}, line {line}: {message}")]
    FileFormat {
        path: String,
        line: usize,
        message: String,
    },
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{0}")]
    Group(#[from] crate::group::GroupError),
}

/// Data for the Frobenius-criterion check: a kernel, optionally a
/// complement, and the expected verdict.
#[derive(Debug, Clone)]
pub struct FrobeniusFixture {
    pub kernel: Vec<String>,
    pub complement: Option<Vec<String>>,
    pub expected: bool,
}

/// Catalog metadata attached to a resolved group.
#[derive(Debug, Clone, Default)]
pub struct GroupMeta {
    pub expected_order: Option<u128>,
    /// `None` for groups loaded from files (solubility is catalog data,
    /// never computed).
    pub soluble: Option<bool>,
    pub trivial_centre: Option<bool>,
    /// Named normal subgroups, as generator words at the same degree.
    pub normal_subgroups: Vec<(String, Vec<String>)>,
    pub frobenius: Option<FrobeniusFixture>,
}

/// A resolved catalog entry: the group plus its metadata.
pub struct CatalogGroup {
    pub name: String,
    pub group: Group,
    pub meta: GroupMeta,
}

impl fmt::Debug for CatalogGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CatalogGroup({})", self.name)
    }
}

struct FixedGroup {
    name: &'static str,
    degree: usize,
    order: u128,
    generators: &'static [&'static str],
    soluble: bool,
    /// names of fixed groups that embed as normal subgroups at this degree
    socles: &'static [&'static str],
}

/// Generator permutations computed from the projective line over GF(8) and
/// GF(9), the projective plane over GF(4), and the 65-point ovoid for the
/// Suzuki group; validated here by the order assertion at build time and by
/// the diameter table reproduction.
static FIXED_GROUPS: &[FixedGroup] = &[
    FixedGroup {
        name: "psl2(8)",
        degree: 9,
        order: 504,
        generators: &[
            "(1,2)(3,4)(5,6)(7,8)",
            "(2,3,5,4,7,8,6)",
            "(1,9)(3,6)(4,7)(5,8)",
        ],
        soluble: false,
        socles: &[],
    },
    FixedGroup {
        name: "psl2(9)",
        degree: 10,
        order: 360,
        generators: &[
            "(1,2,3)(4,5,6)(7,8,9)",
            "(2,7,3,4)(5,8,9,6)",
            "(1,10)(2,3)(5,8)(6,9)",
        ],
        soluble: false,
        socles: &[],
    },
    FixedGroup {
        name: "pgl2(9)",
        degree: 10,
        order: 720,
        generators: &[
            "(1,2,3)(4,5,6)(7,8,9)",
            "(2,7,3,4)(5,8,9,6)",
            "(1,10)(2,3)(5,8)(6,9)",
            "(2,5,7,8,3,9,4,6)",
        ],
        soluble: false,
        socles: &["psl2(9)"],
    },
    FixedGroup {
        name: "m10",
        degree: 10,
        order: 720,
        generators: &[
            "(1,2,3)(4,5,6)(7,8,9)",
            "(2,7,3,4)(5,8,9,6)",
            "(1,10)(2,3)(5,8)(6,9)",
            "(2,5,3,9)(4,8,7,6)",
        ],
        soluble: false,
        socles: &["psl2(9)"],
    },
    FixedGroup {
        name: "aut(alt(6))",
        degree: 10,
        order: 1440,
        generators: &[
            "(1,2,3)(4,5,6)(7,8,9)",
            "(2,7,3,4)(5,8,9,6)",
            "(1,10)(2,3)(5,8)(6,9)",
            "(2,5,7,8,3,9,4,6)",
            "(4,7)(5,8)(6,9)",
        ],
        soluble: false,
        socles: &["psl2(9)", "pgl2(9)", "m10"],
    },
    FixedGroup {
        name: "psl3(4)",
        degree: 21,
        order: 20_160,
        generators: &[
            "(2,10)(3,11)(4,12)(5,13)(14,18)(15,20)(16,21)(17,19)",
            "(2,18)(3,21)(4,19)(5,20)(10,14)(11,16)(12,17)(13,15)",
            "(1,6,2)(3,7,10)(4,9,14)(5,8,18)(12,21,15)(13,16,19)",
        ],
        soluble: false,
        socles: &[],
    },
    FixedGroup {
        name: "pgl3(4)",
        degree: 21,
        order: 60_480,
        generators: &[
            "(2,10)(3,11)(4,12)(5,13)(14,18)(15,20)(16,21)(17,19)",
            "(2,18)(3,21)(4,19)(5,20)(10,14)(11,16)(12,17)(13,15)",
            "(1,6,2)(3,7,10)(4,9,14)(5,8,18)(12,21,15)(13,16,19)",
            "(7,9,8)(10,18,14)(11,21,16)(12,19,17)(13,20,15)",
        ],
        soluble: false,
        socles: &["psl3(4)"],
    },
    FixedGroup {
        name: "sz(8)",
        degree: 65,
        order: 29_120,
        generators: &[
            "(2,10,3,11)(4,12,5,13)(6,14,7,15)(8,16,9,17)(18,28,19,29)(20,26,21,27)(22,32,23,33)(24,30,25,31)(34,46,35,47)(36,48,37,49)(38,42,39,43)(40,44,41,45)(50,64,51,65)(52,62,53,63)(54,60,55,61)(56,58,57,59)",
            "(3,9,5,4,7,8,6)(10,18,34,26,50,58,42)(11,25,37,28,55,64,46)(12,23,40,30,51,65,45)(13,20,39,32,54,59,49)(14,19,41,29,52,63,48)(15,24,38,27,57,61,44)(16,22,35,33,53,60,47)(17,21,36,31,56,62,43)",
            "(1,2)(3,10)(4,50)(5,58)(6,18)(7,26)(8,34)(9,42)(12,36)(13,52)(14,54)(15,22)(16,24)(17,40)(19,32)(20,29)(21,23)(25,46)(27,60)(28,55)(30,43)(31,45)(33,61)(35,44)(37,64)(38,47)(39,41)(48,59)(49,63)(51,62)(53,57)(56,65)",
        ],
        soluble: false,
        socles: &[],
    },
    FixedGroup {
        name: "sz(8):3",
        degree: 65,
        order: 87_360,
        generators: &[
            "(2,10,3,11)(4,12,5,13)(6,14,7,15)(8,16,9,17)(18,28,19,29)(20,26,21,27)(22,32,23,33)(24,30,25,31)(34,46,35,47)(36,48,37,49)(38,42,39,43)(40,44,41,45)(50,64,51,65)(52,62,53,63)(54,60,55,61)(56,58,57,59)",
            "(3,9,5,4,7,8,6)(10,18,34,26,50,58,42)(11,25,37,28,55,64,46)(12,23,40,30,51,65,45)(13,20,39,32,54,59,49)(14,19,41,29,52,63,48)(15,24,38,27,57,61,44)(16,22,35,33,53,60,47)(17,21,36,31,56,62,43)",
            "(1,2)(3,10)(4,50)(5,58)(6,18)(7,26)(8,34)(9,42)(12,36)(13,52)(14,54)(15,22)(16,24)(17,40)(19,32)(20,29)(21,23)(25,46)(27,60)(28,55)(30,43)(31,45)(33,61)(35,44)(37,64)(38,47)(39,41)(48,59)(49,63)(51,62)(53,57)(56,65)",
            "(4,6,8)(5,7,9)(12,14,16)(13,15,17)(18,34,50)(19,35,51)(20,38,56)(21,39,57)(22,40,52)(23,41,53)(24,36,54)(25,37,55)(26,42,58)(27,43,59)(28,46,64)(29,47,65)(30,48,60)(31,49,61)(32,44,62)(33,45,63)",
        ],
        soluble: false,
        socles: &["sz(8)"],
    },
    FixedGroup {
        name: "m11",
        degree: 11,
        order: 7_920,
        generators: &["(1,2,3,4,5,6,7,8,9,10,11)", "(3,7,11,8)(4,10,5,6)"],
        soluble: false,
        socles: &[],
    },
    FixedGroup {
        name: "m12",
        degree: 12,
        order: 95_040,
        generators: &[
            "(1,2,3,4,5,6,7,8,9,10,11)",
            "(3,7,11,8)(4,10,5,6)",
            "(1,12)(2,11)(3,6)(4,8)(5,9)(7,10)",
        ],
        soluble: false,
        socles: &[],
    },
];

fn fixed(name: &str) -> Option<&'static FixedGroup> {
    FIXED_GROUPS.iter().find(|f| f.name == name)
}

fn parse_perms(degree: usize, texts: &[&str]) -> Vec<Permutation> {
    texts
        .iter()
        .map(|s| {
            Permutation::parse_cycles(s, degree)
                .expect("catalog generator strings are well-formed")
        })
        .collect()
}

fn factorial(n: u32) -> u128 {
    (1..=n as u128).product()
}

fn sym_generators(n: u32) -> Vec<String> {
    if n == 1 {
        return vec!["()".to_string()];
    }
    let long: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    if n == 2 {
        return vec!["(1,2)".to_string()];
    }
    vec!["(1,2)".to_string(), format!("({})", long.join(","))]
}

fn alt_generators(n: u32) -> Vec<String> {
    match n {
        2 => vec!["()".to_string()],
        3 => vec!["(1,2,3)".to_string()],
        n if n % 2 == 1 => {
            let long: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
            vec!["(1,2,3)".to_string(), format!("({})", long.join(","))]
        }
        n => {
            let long: Vec<String> = (2..=n).map(|i| i.to_string()).collect();
            vec!["(1,2,3)".to_string(), format!("({})", long.join(","))]
        }
    }
}

fn dihedral_generators(n: u32) -> Vec<String> {
    let rotation: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    // the reflection fixing point 1: i <-> n + 2 - i
    let mut cycles = String::new();
    let mut lo = 2u32;
    let mut hi = n;
    while lo < hi {
        cycles.push_str(&format!("({lo},{hi})"));
        lo += 1;
        hi -= 1;
    }
    if cycles.is_empty() {
        cycles = "()".to_string();
    }
    vec![format!("({})", rotation.join(",")), cycles]
}

fn mod_pow(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut acc = 1u64;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % modulus;
        }
        base = base * base % modulus;
        exp >>= 1;
    }
    acc
}

fn mod_inv(a: u64, p: u64) -> u64 {
    mod_pow(a, p - 2, p)
}

/// The permutation of the projective line over GF(q), q prime, induced by
/// `x -> (ax + b) / (cx + d)`. Points `0..q-1` are the field elements and
/// point `q` is infinity.
fn moebius_perm(q: u64, a: u64, b: u64, c: u64, d: u64) -> Permutation {
    let mut images = vec![0u16; (q + 1) as usize];
    for x in 0..q {
        let num = (a * x + b) % q;
        let den = (c * x + d) % q;
        images[x as usize] = if den == 0 {
            q as u16
        } else {
            (num * mod_inv(den, q) % q) as u16
        };
    }
    images[q as usize] = if c == 0 {
        q as u16
    } else {
        (a * mod_inv(c, q) % q) as u16
    };
    Permutation::from_images(images).expect("a Moebius map permutes the projective line")
}

fn is_prime_u32(n: u32) -> bool {
    crate::commgraph::is_prime(n as u64)
}

fn smallest_primitive_root(q: u64) -> u64 {
    let factors = crate::primegraph::prime_factors((q - 1) as u128);
    (2..q)
        .find(|&g| factors.iter().all(|&p| mod_pow(g, (q - 1) / p, q) != 1))
        .expect("every prime has a primitive root")
}

/// Generators of PSL2(q) on the q+1 points of the projective line:
/// the translation `x -> x+1` and the lower unipotent `x -> x/(x+1)`.
fn psl2_prime_generators(q: u64) -> Vec<Permutation> {
    vec![moebius_perm(q, 1, 1, 0, 1), moebius_perm(q, 1, 0, 1, 1)]
}

fn psl2_order(q: u128) -> u128 {
    q * (q * q - 1) / if q.is_multiple_of(2) { 1 } else { 2 }
}

fn pgl2_order(q: u128) -> u128 {
    q * (q * q - 1)
}

/// Builds a group from a catalog name. Unknown names are errors; the caller
/// decides whether to fall back to a file path.
pub fn resolve_name(name: &str) -> Result<CatalogGroup, CatalogError> {
    let key: String = name
        .chars()
        .filter(|c| !c.is_whitespace())
        .collect::<String>()
        .to_ascii_lowercase();

    if let Some(f) = fixed(&key) {
        let gens = parse_perms(f.degree, f.generators);
        let group = Group::new(f.degree, gens)?;
        let normal_subgroups = f
            .socles
            .iter()
            .map(|s| {
                let sub = fixed(s).expect("socle names refer to fixed groups");
                (
                    sub.name.to_string(),
                    sub.generators.iter().map(|g| g.to_string()).collect(),
                )
            })
            .collect();
        return finish(CatalogGroup {
            name: f.name.to_string(),
            group,
            meta: GroupMeta {
                expected_order: Some(f.order),
                soluble: Some(f.soluble),
                trivial_centre: Some(true),
                normal_subgroups,
                frobenius: None,
            },
        });
    }

    if key == "frobenius_20" {
        let gens = parse_perms(5, &["(1,2,3,4,5)", "(2,3,5,4)"]);
        let group = Group::new(5, gens)?;
        return finish(CatalogGroup {
            name: key,
            group,
            meta: GroupMeta {
                expected_order: Some(20),
                soluble: Some(true),
                trivial_centre: Some(true),
                normal_subgroups: vec![
                    ("5".to_string(), vec!["(1,2,3,4,5)".to_string()]),
                    (
                        "5:2".to_string(),
                        vec!["(1,2,3,4,5)".to_string(), "(2,5)(3,4)".to_string()],
                    ),
                ],
                frobenius: Some(FrobeniusFixture {
                    kernel: vec!["(1,2,3,4,5)".to_string()],
                    complement: Some(vec!["(2,3,5,4)".to_string()]),
                    expected: true,
                }),
            },
        });
    }

    if let Some(args) = parse_family(&key) {
        return resolve_family(&key, args);
    }

    Err(CatalogError::UnknownName(name.to_string()))
}

fn parse_family(key: &str) -> Option<(&str, u32)> {
    let open = key.find('(')?;
    if !key.ends_with(')') {
        return None;
    }
    let family = &key[..open];
    let arg: u32 = key[open + 1..key.len() - 1].parse().ok()?;
    Some((family, arg))
}

fn resolve_family(key: &str, (family, n): (&str, u32)) -> Result<CatalogGroup, CatalogError> {
    let unsupported = |range: &str| CatalogError::UnsupportedParameter {
        name: key.to_string(),
        range: range.to_string(),
    };
    match family {
        "sym" => {
            if !(2..=9).contains(&n) {
                return Err(unsupported("2 <= n <= 9"));
            }
            let degree = n as usize;
            let gens: Vec<Permutation> = sym_generators(n)
                .iter()
                .map(|s| Permutation::parse_cycles(s, degree).unwrap())
                .collect();
            let mut normal_subgroups = Vec::new();
            if n >= 3 {
                normal_subgroups.push((format!("alt({n})"), alt_generators(n)));
            }
            let frobenius = match n {
                3 => Some(FrobeniusFixture {
                    kernel: vec!["(1,2,3)".to_string()],
                    complement: Some(vec!["(1,2)".to_string()]),
                    expected: true,
                }),
                4 => Some(FrobeniusFixture {
                    kernel: vec!["(1,2)(3,4)".to_string(), "(1,3)(2,4)".to_string()],
                    complement: Some(vec!["(1,2)".to_string(), "(1,2,3)".to_string()]),
                    expected: false,
                }),
                _ => None,
            };
            finish(CatalogGroup {
                name: key.to_string(),
                group: Group::new(degree, gens)?,
                meta: GroupMeta {
                    expected_order: Some(factorial(n)),
                    soluble: Some(n <= 4),
                    trivial_centre: Some(n >= 3),
                    normal_subgroups,
                    frobenius,
                },
            })
        }
        "alt" => {
            if !(2..=9).contains(&n) {
                return Err(unsupported("2 <= n <= 9"));
            }
            let degree = n as usize;
            let gens: Vec<Permutation> = alt_generators(n)
                .iter()
                .map(|s| Permutation::parse_cycles(s, degree).unwrap())
                .collect();
            let mut normal_subgroups = Vec::new();
            let mut frobenius = None;
            if n == 4 {
                normal_subgroups.push((
                    "2^2".to_string(),
                    vec!["(1,2)(3,4)".to_string(), "(1,3)(2,4)".to_string()],
                ));
                frobenius = Some(FrobeniusFixture {
                    kernel: vec!["(1,2)(3,4)".to_string(), "(1,3)(2,4)".to_string()],
                    complement: Some(vec!["(1,2,3)".to_string()]),
                    expected: true,
                });
            }
            finish(CatalogGroup {
                name: key.to_string(),
                group: Group::new(degree, gens)?,
                meta: GroupMeta {
                    expected_order: Some(factorial(n) / 2),
                    soluble: Some(n <= 4),
                    trivial_centre: Some(n >= 4),
                    normal_subgroups,
                    frobenius,
                },
            })
        }
        "dihedral" => {
            if !(3..=32).contains(&n) {
                return Err(unsupported("3 <= n <= 32"));
            }
            let degree = n as usize;
            let gens: Vec<Permutation> = dihedral_generators(n)
                .iter()
                .map(|s| Permutation::parse_cycles(s, degree).unwrap())
                .collect();
            let rotation = dihedral_generators(n)[0].clone();
            finish(CatalogGroup {
                name: key.to_string(),
                group: Group::new(degree, gens)?,
                meta: GroupMeta {
                    expected_order: Some(2 * n as u128),
                    soluble: Some(true),
                    trivial_centre: Some(n % 2 == 1),
                    normal_subgroups: vec![(format!("{n}"), vec![rotation.clone()])],
                    frobenius: Some(FrobeniusFixture {
                        kernel: vec![rotation],
                        complement: Some(vec![dihedral_generators(n)[1].clone()]),
                        expected: n % 2 == 1,
                    }),
                },
            })
        }
        "psl2" | "pgl2" => {
            // non-prime field sizes 8 and 9 are served by the fixed tables
            if !is_prime_u32(n) || !(2..=31).contains(&n) {
                return Err(unsupported("prime q <= 31, or q in {8, 9}"));
            }
            let q = n as u64;
            let degree = (q + 1) as usize;
            let mut gens = psl2_prime_generators(q);
            let mut normal_subgroups = Vec::new();
            let (order, soluble) = if family == "pgl2" && q > 2 {
                let g = smallest_primitive_root(q);
                gens.push(moebius_perm(q, g, 0, 0, 1));
                normal_subgroups.push((
                    format!("psl2({q})"),
                    psl2_prime_generators(q)
                        .iter()
                        .map(|p| p.cycle_string())
                        .collect(),
                ));
                (pgl2_order(q as u128), q <= 3)
            } else {
                (psl2_order(q as u128), q <= 3)
            };
            finish(CatalogGroup {
                name: key.to_string(),
                group: Group::new(degree, gens)?,
                meta: GroupMeta {
                    expected_order: Some(order),
                    soluble: Some(soluble),
                    trivial_centre: Some(true),
                    normal_subgroups,
                    frobenius: None,
                },
            })
        }
        _ => Err(CatalogError::UnknownName(key.to_string())),
    }
}

/// Asserts the catalog order invariant before handing the group out.
fn finish(cg: CatalogGroup) -> Result<CatalogGroup, CatalogError> {
    if let Some(expected) = cg.meta.expected_order {
        assert_eq!(
            cg.group.order(),
            expected,
            "catalog entry {} has wrong order",
            cg.name
        );
    }
    Ok(cg)
}

/// Loads a group from a generator file: `degree n` on the first meaningful
/// line, then one generator in cycle notation per line; `#` starts comments.
pub fn load_group_file(path: &Path) -> Result<CatalogGroup, CatalogError> {
    let text = std::fs::read_to_string(path).map_err(|source| CatalogError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let mut degree: Option<usize> = None;
    let mut gens = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |message: String| CatalogError::FileFormat {
            path: path.display().to_string(),
            line: idx + 1,
            message,
        };
        match degree {
            None => {
                let rest = line
                    .strip_prefix("degree")
                    .ok_or_else(|| err("expected 'degree n'".to_string()))?;
                let n: usize = rest
                    .trim()
                    .parse()
                    .map_err(|_| err(format!("bad degree '{}'", rest.trim())))?;
                if n == 0 || n > u16::MAX as usize {
                    return Err(err(format!("degree {n} out of range")));
                }
                degree = Some(n);
            }
            Some(n) => {
                let p = Permutation::parse_cycles(line, n)
                    .map_err(|e| err(e.to_string()))?;
                gens.push(p);
            }
        }
    }
    let degree = degree.ok_or_else(|| CatalogError::FileFormat {
        path: path.display().to_string(),
        line: 0,
        message: "missing 'degree n' line".to_string(),
    })?;
    if gens.is_empty() {
        gens.push(Permutation::identity(degree));
    }
    Ok(CatalogGroup {
        name: path.display().to_string(),
        group: Group::new(degree, gens)?,
        meta: GroupMeta::default(),
    })
}

/// Resolves a group spec: catalog name first, existing file path second.
pub fn resolve_spec(spec: &str) -> Result<CatalogGroup, CatalogError> {
    match resolve_name(spec) {
        Ok(cg) => Ok(cg),
        Err(name_err) => {
            let path = Path::new(spec);
            if path.exists() {
                load_group_file(path)
            } else {
                Err(name_err)
            }
        }
    }
}

/// The default verification corpus: the diameter-table groups plus the
/// small-field linear, Mathieu and Suzuki groups and a few soluble
/// trivial-centre examples.
pub fn default_corpus() -> Vec<&'static str> {
    vec![
        "sym(3)",
        "sym(4)",
        "sym(5)",
        "sym(6)",
        "sym(7)",
        "sym(8)",
        "alt(4)",
        "alt(5)",
        "alt(6)",
        "alt(7)",
        "alt(8)",
        "psl2(5)",
        "psl2(7)",
        "psl2(8)",
        "psl2(9)",
        "psl2(11)",
        "psl2(13)",
        "psl2(17)",
        "psl2(19)",
        "psl2(23)",
        "psl2(29)",
        "psl2(31)",
        "pgl2(5)",
        "pgl2(7)",
        "pgl2(9)",
        "pgl2(11)",
        "m10",
        "aut(alt(6))",
        "m11",
        "m12",
        "psl3(4)",
        "pgl3(4)",
        "sz(8)",
        "sz(8):3",
        "frobenius_20",
        "dihedral(9)",
        "dihedral(15)",
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_orders() {
        assert_eq!(resolve_name("sym(5)").unwrap().group.order(), 120);
        assert_eq!(resolve_name("alt(5)").unwrap().group.order(), 60);
        assert_eq!(resolve_name("Alt(6)").unwrap().group.order(), 360);
        assert_eq!(resolve_name("dihedral(9)").unwrap().group.order(), 18);
        assert_eq!(resolve_name("frobenius_20").unwrap().group.order(), 20);
        // top of the supported family ranges (chain order only)
        assert_eq!(resolve_name("sym(9)").unwrap().group.order(), 362_880);
        assert_eq!(resolve_name("alt(9)").unwrap().group.order(), 181_440);
        assert_eq!(resolve_name("sym(2)").unwrap().group.order(), 2);
        assert_eq!(resolve_name("dihedral(32)").unwrap().group.order(), 64);
    }

    #[test]
    fn projective_line_orders() {
        let psl27 = resolve_name("psl2(7)").unwrap();
        assert_eq!(psl27.group.order(), 168);
        assert_eq!(psl27.group.degree(), 8);
        assert_eq!(resolve_name("psl2(5)").unwrap().group.order(), 60);
        assert_eq!(resolve_name("pgl2(7)").unwrap().group.order(), 336);
        assert_eq!(resolve_name("psl2(31)").unwrap().group.order(), 14_880);
    }

    #[test]
    fn every_supported_projective_line_group_builds() {
        // resolve_name asserts the order internally, so this sweeps the
        // whole supported range of the Moebius constructors
        for q in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31] {
            let psl = resolve_name(&format!("psl2({q})")).unwrap();
            assert_eq!(psl.group.degree(), q as usize + 1);
            resolve_name(&format!("pgl2({q})")).unwrap();
        }
    }

    #[test]
    fn fixed_group_orders() {
        for (name, order) in [
            ("psl2(8)", 504u128),
            ("psl2(9)", 360),
            ("pgl2(9)", 720),
            ("m10", 720),
            ("aut(alt(6))", 1440),
            ("m11", 7920),
        ] {
            assert_eq!(resolve_name(name).unwrap().group.order(), order, "{name}");
        }
    }

    #[test]
    fn suzuki_group_order() {
        let sz8 = resolve_name("sz(8)").unwrap();
        assert_eq!(sz8.group.degree(), 65);
        // |Sz(q)| = q^2 (q^2 + 1)(q - 1) at q = 8
        assert_eq!(sz8.group.order(), 64 * 65 * 7);
    }

    #[test]
    fn unsupported_parameters_are_reported() {
        assert!(matches!(
            resolve_name("sym(12)"),
            Err(CatalogError::UnsupportedParameter { .. })
        ));
        assert!(matches!(
            resolve_name("psl2(10)"),
            Err(CatalogError::UnsupportedParameter { .. })
        ));
        assert!(matches!(
            resolve_name("nonsense"),
            Err(CatalogError::UnknownName(_))
        ));
    }

    #[test]
    fn group_file_round_trip() {
        let dir = std::env::temp_dir().join("commgraph-test-group-file");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("f20.group");
        std::fs::write(
            &path,
            "# the 5:4 Frobenius group\ndegree 5\n(1,2,3,4,5)\n(2,3,5,4)\n",
        )
        .unwrap();
        let cg = load_group_file(&path).unwrap();
        assert_eq!(cg.group.order(), 20);

        std::fs::write(&path, "degree 5\n(1,2,3,4,5\n").unwrap();
        assert!(matches!(
            load_group_file(&path),
            Err(CatalogError::FileFormat { line: 2, .. })
        ));
    }

    #[test]
    fn corpus_resolves_and_matches_centre_flags() {
        for name in default_corpus() {
            let cg = resolve_name(name).unwrap();
            assert!(cg.meta.expected_order.is_some(), "{name}");
            // the flag assertion itself happens during analysis; here just
            // check the catalog promises a trivial centre for the corpus
            assert_eq!(cg.meta.trivial_centre, Some(true), "{name}");
        }
    }
}
