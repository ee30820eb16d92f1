#include "sepset/fixtures.hpp"

namespace sepset {

namespace {

constexpr const char* kEx = R"(# EX: X = {a, b, c}; f = (0,0,1) splits {a,b} from c, g = (0,1,1) splits a from b.
settings
  max-atoms = 12
  max-enum = 10000
end

set X
  atoms = a b c
end

set Xab
  atoms = a b c
  blocks = {a b} {c}
end

set A
  atoms = a c
end

set S
  atoms = s t u
  blocks = {s t} {u}
end

set I
  atoms = 0 1
end

set R
  atoms = 0 1
end

fn f
  on = X
  values = 0 0 1
end

fn g
  on = X
  values = 0 1 1
end

fn fab
  on = Xab
  values = 0 0 1
end

fn k
  on = I
  values = 0 1
end

fn idR
  on = R
  values = 0 1
end

family F
  kind = functions
  on = X
  members = f
end

family Fp
  kind = functions
  on = X
  members = f g
end

family Fab
  kind = functions
  on = Xab
  members = fab
end

family K
  kind = functions
  on = I
  members = k
end

family IdR
  kind = functions
  on = R
  members = idR
end

ineq Xn
  on = X
  induced-by = Fp
end

ineq Xabn
  on = Xab
  induced-by = Fab
end

ineq In
  on = I
  induced-by = K
end

ineq Rn
  on = R
  induced-by = IdR
end

# collapse identifies a with b; it is affine for both F and F′.
fn collapse
  from = X
  to = X
  image = a a c
end

fn iac
  from = A
  to = X
  image = a c
end

fn q
  from = X
  to = S
  image = s t u
end

fn fR
  from = X
  to = R
  image = 0 0 1
end

fn gR
  from = X
  to = R
  image = 0 1 1
end

family Lam
  kind = set
  index = In
  fiber 0 = Xn
  fiber 1 = Xabn
  transport 0 0 = id
  transport 1 1 = id
end

family C
  kind = cs
  index = In
  index-family = K
  fiber 0 = Xn
  fiber 1 = Xabn
  fiber-family 0 = Fp
  fiber-family 1 = Fab
  transport 0 0 = id
  transport 1 1 = id
  fn-transport 0 0 = id
  fn-transport 1 1 = id
end

family LamR
  kind = set
  index = In
  fiber 0 = Rn
  fiber 1 = Rn
  transport 0 0 = id
  transport 1 1 = id
end

check axioms
  law = ineq-axioms
  ineq = Xn
end

check remark
  law = f1
  ineq = Xn
  family = Fp
end

check grow
  law = monotonicity
  family = F
  super = Fp
end

check ex-complsep
  law = complsep
  family = Fp
  ineq = Xn
  product-with = Fab
  funspace-to = Fab
  subset = iac
end

check collapse-affine
  law = affine
  map = collapse
  source = Fp
  target = Fp
end

check two-fibers
  law = family sigma-apartness
  family = Lam
end

check cs-two
  law = cs-family pi-cs fcl3
  family = C
end

check free-set
  law = free free-adjunction
  set = S
  target = Fp
  phi = q
  theta = collapse
  theta-target = Fp
end

check reflect
  law = rho dual r-power tychonoff
  family = F
end

check reflect-separating
  law = rho tychonoff
  family = Fp
end

check adjoint
  law = rho-adjunction
  source = Fp
  target = F
  phi = collapse
  phi-source = Fp
  theta = collapse
  theta-target = F
end

check product
  law = rho-product
  left = F
  right = Fab
end

check dual-arrows
  law = dual
  family = Fp
  arrow = collapse
  arrow-target = Fp
end

check m-family
  law = hom-family
  ineq = Xn
  family = LamR
end

check embedding
  law = embed
  ineq = Xn
  family = LamR
  h = fR gR
end

check power
  law = r-power
  family = F
  values = 0 1
end
)";

constexpr const char* kMetric = R"(# U0(Z) for a three-point metric space.
set Z
  atoms = p q r
end

family U
  kind = metric
  on = Z
  row p = 0 3/2 2
  row q = 3/2 0 1/2
  row r = 2 1/2 0
end

ineq Zn
  on = Z
  induced-by = U
end

check metric-axioms
  law = ineq-axioms
  ineq = Zn
  require = Ineq3 Ineq4 Ineq5 Ineq6
end

check metric-remark
  law = f1
  ineq = Zn
  family = U
end

check metric-space
  law = complsep rho dual tychonoff
  family = U
end
)";

constexpr const char* kGlobal = R"(# A global family over the two-point index: EX and a renamed copy of it.
set I
  atoms = 0 1
end

set X
  atoms = a b c
end

set Y
  atoms = p q r
end

fn k
  on = I
  values = 0 1
end

fn f
  on = X
  values = 0 0 1
end

fn g
  on = X
  values = 0 1 1
end

fn fy
  on = Y
  values = 0 0 1
end

fn gy
  on = Y
  values = 0 1 1
end

family K
  kind = functions
  on = I
  members = k
end

family Fp
  kind = functions
  on = X
  members = f g
end

family Gy
  kind = functions
  on = Y
  members = fy gy
end

ineq In
  on = I
  induced-by = K
end

ineq Xn
  on = X
  induced-by = Fp
end

ineq Yn
  on = Y
  induced-by = Gy
end

fn rename
  from = X
  to = Y
  image = p q r
end

fn back
  from = Y
  to = X
  image = a b c
end

family G
  kind = global
  index = In
  index-family = K
  fiber 0 = Xn
  fiber 1 = Yn
  fiber-family 0 = Fp
  fiber-family 1 = Gy
  transport 0 0 = id
  transport 0 1 = rename
  transport 1 0 = back
  transport 1 1 = id
  fn-transport 0 0 = id
  fn-transport 0 1 = 0 1
  fn-transport 1 0 = 0 1
  fn-transport 1 1 = id
end

check global
  law = global-family sigma-global pr2
  family = G
end

check dependent
  law = dep-se
  family = G
  table = a p
end
)";

}  // namespace

const std::vector<Fixture>& builtin_fixtures() {
  static const std::vector<Fixture> all{{"EX", kEx}, {"metric", kMetric}, {"global-2-family", kGlobal}};
  return all;
}

const Fixture* find_fixture(std::string_view name) {
  for (const auto& f : builtin_fixtures())
    if (f.name == name) return &f;
  return nullptr;
}

}  // namespace sepset
