//! Finite groups presented as explicit multiplication tables over an ordered
//! element listing.
//!
//! Supported families: cyclic C_n, dihedral D_m (order 2m), generalized
//! quaternion Q_{4n}, semidirect products C_l x| C_m (y x y^-1 = x^k), and
//! direct products of any of these. A group comes with a *listing* — the
//! ordered enumeration g_1, ..., g_n used to index coefficient vectors — and
//! different listings of the same group give different (but conjugate) tables,
//! hence different generator-matrix shapes downstream.

use crate::error::{Error, Result};
use std::fmt;

/// Largest supported group order.
pub const MAX_GROUP_ORDER: usize = 4096;

/// Which group, structurally.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupKind {
    /// C_n, generator `x`.
    Cyclic(usize),
    /// D_m of order 2m: rotation `a` (order m), reflection `b`.
    Dihedral(usize),
    /// Q_{4n} (n >= 2): `a` of order 2n, `b` with b^2 = a^n, b a b^-1 = a^-1.
    Quaternion(usize),
    /// C_l x| C_m with y x y^-1 = x^k: generators `x` (order l), `y` (order m).
    Semidirect { l: usize, m: usize, k: usize },
    /// Direct product of the listed factors.
    Product(Vec<GroupSpec>),
}

/// Element listing selector.
///
/// For dihedral groups the four forms are:
/// f1 = {e, a, ..., a^{m-1}, b, ba, ..., ba^{m-1}},
/// f2 = {e, a, ..., a^{m-1}, b, ab, ..., a^{m-1}b},
/// f3 = f1 interleaved ({e, b, a, ba, ...}),
/// f4 = f2 interleaved ({e, b, a, ab, ...}).
/// Quaternion groups accept f1 = {..., b, ab, a^2 b, ...} and
/// f2 = {..., b, ba, ba^2, ...}. Products accept `Inner(i)` (0-based factor
/// index that runs fastest), a full `Order` (factor indices innermost first),
/// or a form shorthand: for C x C, f1/f2 = first/second factor inner; for
/// C x D, f1/f2 = dihedral sublisting f1 with factor 1/2 inner and f3/f4 =
/// dihedral sublisting f2 with factor 1/2 inner. Semidirect products accept
/// `Inner(0)` (x runs fastest, the default) or `Inner(1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Listing {
    Default,
    Form(u8),
    Inner(usize),
    Order(Vec<usize>),
}

/// A group plus the listing used to enumerate its elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupSpec {
    pub kind: GroupKind,
    pub listing: Listing,
}

impl GroupSpec {
    pub fn new(kind: GroupKind) -> Self {
        GroupSpec { kind, listing: Listing::Default }
    }

    pub fn with_listing(kind: GroupKind, listing: Listing) -> Self {
        GroupSpec { kind, listing }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            GroupKind::Cyclic(n) => write!(f, "C{n}")?,
            GroupKind::Dihedral(m) => write!(f, "D{m}")?,
            GroupKind::Quaternion(n) => write!(f, "Q{}", 4 * n)?,
            GroupKind::Semidirect { l, m, k } => write!(f, "C{l}sd{k}C{m}")?,
            GroupKind::Product(fs) => {
                for (i, sub) in fs.iter().enumerate() {
                    if i > 0 {
                        write!(f, "x")?;
                    }
                    write!(f, "{sub}")?;
                }
            }
        }
        match &self.listing {
            Listing::Default => Ok(()),
            Listing::Form(n) => write!(f, ":form=f{n}"),
            Listing::Inner(i) => write!(f, ":inner={}", i + 1),
            Listing::Order(p) => {
                let s: Vec<String> = p.iter().map(|i| (i + 1).to_string()).collect();
                write!(f, ":order={}", s.join(","))
            }
        }
    }
}

/// Canonical-index multiplication, independent of any listing.
enum Engine {
    Cyclic { n: usize },
    /// (i, j) -> i + m*j for a^i b^j; b a = a^-1 b.
    Dihedral { m: usize },
    /// (i, j) -> i + 2n*j for a^i b^j; b a = a^-1 b, b^2 = a^n.
    Quaternion { n: usize },
    /// (i, j) -> i + l*j for x^i y^j; y^j x^i = x^{i k^j} y^j.
    Semidirect { l: usize, m: usize, k: usize },
    Product { engines: Vec<Engine>, sizes: Vec<usize> },
}

impl Engine {
    fn order(&self) -> usize {
        match self {
            Engine::Cyclic { n } => *n,
            Engine::Dihedral { m } => 2 * m,
            Engine::Quaternion { n } => 4 * n,
            Engine::Semidirect { l, m, .. } => l * m,
            Engine::Product { sizes, .. } => sizes.iter().product(),
        }
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        match self {
            Engine::Cyclic { n } => (a + b) % n,
            Engine::Dihedral { m } => {
                let (i1, j1) = (a % m, a / m);
                let (i2, j2) = (b % m, b / m);
                let i = if j1 == 0 { (i1 + i2) % m } else { (i1 + m - i2 % m) % m };
                i + m * ((j1 + j2) % 2)
            }
            Engine::Quaternion { n } => {
                let n2 = 2 * n;
                let (i1, j1) = (a % n2, a / n2);
                let (i2, j2) = (b % n2, b / n2);
                let mut i = if j1 == 0 { (i1 + i2) % n2 } else { (i1 + n2 - i2 % n2) % n2 };
                let mut j = j1 + j2;
                if j == 2 {
                    i = (i + n) % n2; // b^2 = a^n
                    j = 0;
                }
                i + n2 * j
            }
            Engine::Semidirect { l, m, k } => {
                let (l, m, k) = (*l, *m, *k);
                let (i1, j1) = (a % l, a / l);
                let (i2, j2) = (b % l, b / l);
                // y^{j1} x^{i2} = x^{i2 k^{j1}} y^{j1}
                let mut kj = 1usize;
                for _ in 0..j1 {
                    kj = kj * k % l.max(1);
                }
                ((i1 + i2 * kj) % l) + l * ((j1 + j2) % m)
            }
            Engine::Product { engines, sizes } => {
                let (mut a, mut b, mut out, mut stride) = (a, b, 0usize, 1usize);
                for (e, &s) in engines.iter().zip(sizes) {
                    out += e.mul(a % s, b % s) * stride;
                    a /= s;
                    b /= s;
                    stride *= s;
                }
                out
            }
        }
    }
}

/// One listed component: canonical indices in listing order, the word shown
/// for each position, and named generators (as canonical indices).
struct Component {
    engine: Engine,
    listing: Vec<usize>,
    words: Vec<String>,
    gens: Vec<(String, usize)>,
}

fn power_word(name: &str, e: usize) -> String {
    match e {
        0 => String::new(),
        1 => name.to_string(),
        _ => format!("{name}{e}"),
    }
}

fn join_word(parts: &[String]) -> String {
    let s: String = parts.concat();
    if s.is_empty() {
        "e".to_string()
    } else {
        s
    }
}

/// Letters handed out to product factors. `e` is the identity and `w` is the
/// field primitive, so neither appears here.
const NAME_POOL: [&str; 8] = ["x", "y", "z", "u", "v", "t", "s", "r"];

struct NamePool {
    next: usize,
}

impl NamePool {
    fn take(&mut self) -> Result<&'static str> {
        let name = NAME_POOL.get(self.next).ok_or_else(|| Error::InvalidGroup {
            reason: "too many product factors to name generators".into(),
        })?;
        self.next += 1;
        Ok(name)
    }
}

fn listing_name(listing: &Listing) -> String {
    match listing {
        Listing::Default => "default".into(),
        Listing::Form(n) => format!("form=f{n}"),
        Listing::Inner(i) => format!("inner={}", i + 1),
        Listing::Order(p) => format!("order={p:?}"),
    }
}

fn invalid_listing(spec: &GroupSpec) -> Error {
    Error::InvalidListing {
        listing: listing_name(&spec.listing),
        group: format!("{spec}"),
    }
}

/// Build one component. `pool`: None means top level (cyclic uses x,
/// dihedral/quaternion use a/b, semidirect uses x/y); Some(pool) draws
/// letters for product factors.
fn build_component(spec: &GroupSpec, pool: Option<&mut NamePool>) -> Result<Component> {
    match &spec.kind {
        GroupKind::Cyclic(n) => {
            let n = *n;
            if n == 0 {
                return Err(Error::InvalidGroup { reason: "C0 has no elements".into() });
            }
            if !matches!(spec.listing, Listing::Default) {
                return Err(invalid_listing(spec));
            }
            let name = match pool {
                Some(p) => p.take()?,
                None => "x",
            };
            Ok(Component {
                engine: Engine::Cyclic { n },
                listing: (0..n).collect(),
                words: (0..n).map(|i| join_word(&[power_word(name, i)])).collect(),
                gens: vec![(name.to_string(), 1 % n)],
            })
        }
        GroupKind::Dihedral(m) => {
            let m = *m;
            if m == 0 {
                return Err(Error::InvalidGroup { reason: "D0 has no elements".into() });
            }
            let form = match spec.listing {
                Listing::Default => 1,
                Listing::Form(f @ 1..=4) => f,
                _ => return Err(invalid_listing(spec)),
            };
            let (rot, refl) = match pool {
                Some(p) => (p.take()?, p.take()?),
                None => ("a", "b"),
            };
            // canonical: a^i b^j -> i + m*j
            let rot_slot = |k: usize| (k % m, join_word(&[power_word(rot, k % m)]));
            // listing entry b a^k, canonical a^{-k} b
            let refl_left = |k: usize| {
                ((m - k % m) % m + m, join_word(&[refl.to_string(), power_word(rot, k % m)]))
            };
            // listing entry a^k b
            let refl_right =
                |k: usize| (k % m + m, join_word(&[power_word(rot, k % m), refl.to_string()]));
            let mut slots: Vec<(usize, String)> = Vec::with_capacity(2 * m);
            match form {
                1 => {
                    slots.extend((0..m).map(rot_slot));
                    slots.extend((0..m).map(refl_left));
                }
                2 => {
                    slots.extend((0..m).map(rot_slot));
                    slots.extend((0..m).map(refl_right));
                }
                3 => {
                    for k in 0..m {
                        slots.push(rot_slot(k));
                        slots.push(refl_left(k));
                    }
                }
                _ => {
                    for k in 0..m {
                        slots.push(rot_slot(k));
                        slots.push(refl_right(k));
                    }
                }
            }
            Ok(Component {
                engine: Engine::Dihedral { m },
                listing: slots.iter().map(|s| s.0).collect(),
                words: slots.into_iter().map(|s| s.1).collect(),
                gens: vec![(rot.to_string(), 1 % m), (refl.to_string(), m)],
            })
        }
        GroupKind::Quaternion(n) => {
            let n = *n;
            if n < 2 {
                return Err(Error::InvalidGroup {
                    reason: format!("Q{} needs n >= 2 (order 4n >= 8)", 4 * n),
                });
            }
            let form = match spec.listing {
                Listing::Default => 1,
                Listing::Form(f @ 1..=2) => f,
                _ => return Err(invalid_listing(spec)),
            };
            let (rot, refl) = match pool {
                Some(p) => (p.take()?, p.take()?),
                None => ("a", "b"),
            };
            let n2 = 2 * n;
            let mut slots: Vec<(usize, String)> = (0..n2)
                .map(|i| (i, join_word(&[power_word(rot, i)])))
                .collect();
            match form {
                1 => slots.extend(
                    (0..n2).map(|k| (k + n2, join_word(&[power_word(rot, k), refl.to_string()]))),
                ),
                _ => slots.extend((0..n2).map(|k| {
                    ((n2 - k) % n2 + n2, join_word(&[refl.to_string(), power_word(rot, k)]))
                })),
            }
            Ok(Component {
                engine: Engine::Quaternion { n },
                listing: slots.iter().map(|s| s.0).collect(),
                words: slots.into_iter().map(|s| s.1).collect(),
                gens: vec![(rot.to_string(), 1), (refl.to_string(), n2)],
            })
        }
        GroupKind::Semidirect { l, m, k } => {
            let (l, m, k) = (*l, *m, *k);
            if l == 0 || m == 0 {
                return Err(Error::InvalidGroup { reason: "semidirect factors must be nonempty".into() });
            }
            let k = k % l;
            if l > 1 && gcd(k, l) != 1 {
                return Err(Error::InvalidGroup {
                    reason: format!("semidirect action x -> x^{k} is not invertible mod {l}"),
                });
            }
            // need k^m = 1 (mod l) for y^m = 1 to be consistent
            let mut km = 1usize;
            for _ in 0..m {
                km = km * k % l;
            }
            if l > 1 && km != 1 {
                return Err(Error::InvalidGroup {
                    reason: format!("k^m = {k}^{m} is not 1 mod {l}; the action has the wrong order"),
                });
            }
            let inner = match spec.listing {
                Listing::Default | Listing::Inner(0) => 0,
                Listing::Inner(1) => 1,
                _ => return Err(invalid_listing(spec)),
            };
            let (xn, yn) = match pool {
                Some(p) => {
                    let a = p.take()?;
                    (a, p.take()?)
                }
                None => ("x", "y"),
            };
            let mut slots = Vec::with_capacity(l * m);
            let word = |i: usize, j: usize| join_word(&[power_word(xn, i), power_word(yn, j)]);
            if inner == 0 {
                for j in 0..m {
                    for i in 0..l {
                        slots.push((i + l * j, word(i, j)));
                    }
                }
            } else {
                for i in 0..l {
                    for j in 0..m {
                        slots.push((i + l * j, word(i, j)));
                    }
                }
            }
            Ok(Component {
                engine: Engine::Semidirect { l, m, k },
                listing: slots.iter().map(|s| s.0).collect(),
                words: slots.into_iter().map(|s| s.1).collect(),
                gens: vec![(xn.to_string(), 1 % l), (yn.to_string(), l % (l * m))],
            })
        }
        GroupKind::Product(factors) => {
            if factors.len() < 2 {
                return Err(Error::InvalidGroup {
                    reason: "a direct product needs at least two factors".into(),
                });
            }
            // Resolve form shorthands into factor listings + loop order.
            let (factors, loop_order): (Vec<GroupSpec>, Vec<usize>) =
                resolve_product_listing(spec, factors)?;
            // nested products draw from the parent's pool
            let mut fresh = NamePool { next: 0 };
            let pool: &mut NamePool = match pool {
                Some(outer) => outer,
                None => &mut fresh,
            };
            let mut built = Vec::new();
            for f in &factors {
                built.push(build_component(f, Some(&mut *pool))?);
            }
            let sizes: Vec<usize> = built.iter().map(|c| c.engine.order()).collect();
            let total: usize = sizes.iter().product();
            // positions: loop_order[0] varies fastest
            let mut listing = Vec::with_capacity(total);
            let mut words = Vec::with_capacity(total);
            let strides: Vec<usize> = {
                let mut s = vec![1; sizes.len()];
                for t in 1..sizes.len() {
                    s[t] = s[t - 1] * sizes[t - 1];
                }
                s
            };
            for position in 0..total {
                let mut tmp = position;
                let mut tuple = vec![0usize; sizes.len()];
                for &t in &loop_order {
                    tuple[t] = tmp % sizes[t];
                    tmp /= sizes[t];
                }
                let mut canonical = 0usize;
                let mut parts = Vec::new();
                for (t, c) in built.iter().enumerate() {
                    canonical += c.listing[tuple[t]] * strides[t];
                    let wrd = &c.words[tuple[t]];
                    if wrd != "e" {
                        parts.push(wrd.clone());
                    }
                }
                listing.push(canonical);
                words.push(join_word(&parts));
            }
            let mut gens = Vec::new();
            for (t, c) in built.iter().enumerate() {
                for (name, canon) in &c.gens {
                    gens.push((name.clone(), canon * strides[t]));
                }
            }
            Ok(Component {
                engine: Engine::Product {
                    engines: built.into_iter().map(|c| c.engine).collect(),
                    sizes,
                },
                listing,
                words,
                gens,
            })
        }
    }
}

/// Turn a product spec's listing into per-factor listings plus a loop order
/// (innermost factor first).
fn resolve_product_listing(
    spec: &GroupSpec,
    factors: &[GroupSpec],
) -> Result<(Vec<GroupSpec>, Vec<usize>)> {
    let natural_order = |inner: usize| -> Vec<usize> {
        let mut order = vec![inner];
        order.extend((0..factors.len()).filter(|&t| t != inner));
        order
    };
    match &spec.listing {
        Listing::Default => Ok((factors.to_vec(), natural_order(0))),
        Listing::Inner(i) => {
            if *i >= factors.len() {
                return Err(invalid_listing(spec));
            }
            Ok((factors.to_vec(), natural_order(*i)))
        }
        Listing::Order(perm) => {
            let mut seen = vec![false; factors.len()];
            if perm.len() != factors.len() {
                return Err(invalid_listing(spec));
            }
            for &t in perm {
                if t >= factors.len() || seen[t] {
                    return Err(invalid_listing(spec));
                }
                seen[t] = true;
            }
            Ok((factors.to_vec(), perm.clone()))
        }
        Listing::Form(f) => {
            // Form names only exist for two-factor products, and the factors
            // must be listed with Default so the form decides everything.
            if factors.len() != 2
                || factors.iter().any(|g| !matches!(g.listing, Listing::Default))
            {
                return Err(invalid_listing(spec));
            }
            let shapes: Vec<&GroupKind> = factors.iter().map(|g| &g.kind).collect();
            match (shapes[0], shapes[1], f) {
                (GroupKind::Cyclic(_), GroupKind::Cyclic(_), 1..=2) => {
                    Ok((factors.to_vec(), natural_order(*f as usize - 1)))
                }
                (GroupKind::Cyclic(_), GroupKind::Dihedral(_), 1..=4) => {
                    let sub_form = if *f <= 2 { 1 } else { 2 };
                    let inner = if f % 2 == 1 { 0 } else { 1 };
                    let fs = vec![
                        factors[0].clone(),
                        GroupSpec::with_listing(factors[1].kind.clone(), Listing::Form(sub_form)),
                    ];
                    Ok((fs, natural_order(inner)))
                }
                _ => Err(invalid_listing(spec)),
            }
        }
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// A fully built group: ordered listing, multiplication and inverse tables.
pub struct GroupTable {
    spec: GroupSpec,
    order: usize,
    words: Vec<String>,
    gens: Vec<(String, u32)>,
    mul: Vec<u32>,
    inv: Vec<u32>,
    identity: u32,
}

impl GroupTable {
    pub fn build(spec: &GroupSpec) -> Result<GroupTable> {
        let component = build_component(spec, None)?;
        let n = component.engine.order();
        if n > MAX_GROUP_ORDER {
            return Err(Error::GroupTooLarge { order: n, bound: MAX_GROUP_ORDER });
        }
        debug_assert_eq!(component.listing.len(), n);
        let mut pos_of = vec![u32::MAX; n];
        for (pos, &canon) in component.listing.iter().enumerate() {
            assert!(pos_of[canon] == u32::MAX, "listing repeats an element");
            pos_of[canon] = pos as u32;
        }
        let mut mul = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                mul[i * n + j] =
                    pos_of[component.engine.mul(component.listing[i], component.listing[j])];
            }
        }
        let identity = pos_of[0];
        let mut inv = vec![0u32; n];
        for i in 0..n {
            inv[i] = (0..n)
                .find(|&j| mul[i * n + j] == identity)
                .expect("every element has an inverse") as u32;
        }
        let gens = component
            .gens
            .into_iter()
            .map(|(name, canon)| (name, pos_of[canon]))
            .collect();
        Ok(GroupTable {
            spec: spec.clone(),
            order: n,
            words: component.words,
            gens,
            mul,
            inv,
            identity,
        })
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }
    pub fn order(&self) -> usize {
        self.order
    }
    /// Listing position of the identity.
    pub fn identity(&self) -> usize {
        self.identity as usize
    }
    /// Word displayed for listing position i.
    pub fn word(&self, i: usize) -> &str {
        &self.words[i]
    }
    pub fn words(&self) -> &[String] {
        &self.words
    }
    /// Named generators as (name, listing position).
    pub fn generators(&self) -> impl Iterator<Item = (&str, usize)> {
        self.gens.iter().map(|(n, p)| (n.as_str(), *p as usize))
    }

    /// Product of listing positions.
    #[inline]
    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.mul[i * self.order + j] as usize
    }
    /// Inverse of a listing position.
    #[inline]
    pub fn inv(&self, i: usize) -> usize {
        self.inv[i] as usize
    }

    /// i-th power by repeated squaring.
    pub fn pow(&self, i: usize, e: usize) -> usize {
        let mut acc = self.identity();
        let mut base = i;
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Two tables are interchangeable iff they were built from equal specs.
    pub fn same_group(&self, other: &GroupTable) -> bool {
        self.spec == other.spec
    }

    /// Listing index of a word such as `e`, `a2b`, or `x2y`. Generators are
    /// single letters with optional decimal exponents, multiplied left to
    /// right.
    pub fn index_of_word(&self, word: &str) -> Result<usize> {
        let w = word.trim();
        if w == "e" {
            return Ok(self.identity());
        }
        let bytes = w.as_bytes();
        let mut pos = 0usize;
        let mut acc = self.identity();
        while pos < bytes.len() {
            let c = bytes[pos] as char;
            let gen = self
                .gens
                .iter()
                .find(|(name, _)| name == &c.to_string())
                .map(|(_, p)| *p as usize)
                .ok_or_else(|| Error::Parse {
                    pos,
                    message: format!("unknown generator `{c}` for {}", self.spec),
                })?;
            pos += 1;
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            let e: usize = if start == pos {
                1
            } else {
                w[start..pos].parse().map_err(|_| Error::Parse {
                    pos: start,
                    message: "exponent overflow".into(),
                })?
            };
            acc = self.mul(acc, self.pow(gen, e));
        }
        Ok(acc)
    }

    /// The n x n pattern P[i][j] = listing index of g_i^{-1} g_j (0-based).
    /// Seen over indices, this is the shape every generator matrix inherits.
    pub fn sigma_pattern(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|i| (0..self.order).map(|j| self.mul(self.inv(i), j)).collect())
            .collect()
    }
}

impl fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupTable({}, order {})", self.spec, self.order)
    }
}
