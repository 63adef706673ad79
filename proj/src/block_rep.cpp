#include "uniserial/block_rep.hpp"

#include <sstream>

#include "uniserial/error.hpp"
#include "uniserial/sl2.hpp"

namespace uniserial {

namespace {

Integer binomial(int n, int k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

bool is_radical(const AlgebraSpec& spec, std::size_t g) { return g >= spec.v(0); }

}  // namespace

std::string socle_str(const SocleSequence& seq) {
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) out += (i ? ",V(" : "V(") + std::to_string(seq[i]) + ")";
  return out;
}

BlockRep::BlockRep(AlgebraSpec spec, SocleSequence socle, std::vector<RatMatrix> generators)
    : spec_(spec), socle_(std::move(socle)), generators_(std::move(generators)) {
  if (socle_.empty()) throw PreconditionError("socle sequence must be non-empty");
  offsets_.push_back(0);
  for (int a : socle_) {
    if (a < 0) throw PreconditionError("highest weights must be non-negative");
    offsets_.push_back(offsets_.back() + static_cast<std::size_t>(a + 1));
  }
  if (generators_.size() != spec_.dim()) throw PreconditionError("need one matrix per basis element of g");

  const std::size_t l = length();
  const std::size_t n = dimension();
  std::vector<Sl2Triple> diag;
  for (int a : socle_) diag.push_back(rep_matrices(a));

  blocks_.resize(generators_.size());
  for (std::size_t g = 0; g < generators_.size(); ++g) {
    const RatMatrix& full = generators_[g];
    if (full.rows() != n || full.cols() != n)
      throw PreconditionError("generator " + spec_.basis_name(g) + " has the wrong size");
    for (std::size_t i = 0; i < l; ++i)
      for (std::size_t j = 0; j < l; ++j) {
        RatMatrix b = full.block(offsets_[i], offsets_[j], block_size(i), block_size(j));
        const auto where = [&] {
          return spec_.basis_name(g) + " block (" + std::to_string(i) + "," + std::to_string(j) + ")";
        };
        if (!is_radical(spec_, g)) {
          const bool ok = (i == j) ? b == diag[i][kSl2Generators[g]] : b.is_zero();
          if (!ok) throw PreconditionError("sl(2) generator not in adapted form at " + where());
        } else {
          const std::size_t gap = (g == spec_.z()) ? 2 : 1;
          if (j < i + gap && !b.is_zero()) throw PreconditionError("radical generator not strictly upper at " + where());
        }
        blocks_[g].push_back(std::move(b));
      }
  }
}

BlockRep BlockRep::from_blocks(const AlgebraSpec& spec, SocleSequence socle, const std::vector<BlockMap>& radical) {
  if (radical.size() != spec.heisenberg_dim()) throw PreconditionError("need blocks for v_0..v_m and z");
  std::vector<std::size_t> offsets{0};
  for (int a : socle) {
    if (a < 0) throw PreconditionError("highest weights must be non-negative");
    offsets.push_back(offsets.back() + static_cast<std::size_t>(a + 1));
  }
  const std::size_t n = offsets.back();

  std::vector<RatMatrix> gens(spec.dim(), RatMatrix(n, n));
  for (std::size_t i = 0; i < socle.size(); ++i) {
    const Sl2Triple r = rep_matrices(socle[i]);
    for (std::size_t s = 0; s < 3; ++s) gens[s].set_block(offsets[i], offsets[i], r[kSl2Generators[s]]);
  }
  for (std::size_t k = 0; k < radical.size(); ++k)
    for (const auto& [pos, b] : radical[k]) {
      const auto [i, j] = pos;
      if (i >= socle.size() || j >= socle.size()) throw PreconditionError("block position out of range");
      if (b.rows() != offsets[i + 1] - offsets[i] || b.cols() != offsets[j + 1] - offsets[j])
        throw PreconditionError("block (" + std::to_string(i) + "," + std::to_string(j) + ") has the wrong shape");
      gens[3 + k].set_block(offsets[i], offsets[j], b);
    }
  return BlockRep(spec, std::move(socle), std::move(gens));
}

RatMatrix BlockRep::image(const GalileiElement& x) const {
  RatMatrix out(dimension(), dimension());
  for (std::size_t k = 0; k < generators_.size(); ++k)
    if (!x[k].is_zero()) out += generators_[k] * x[k];
  return out;
}

BlockRep make_length3(const AlgebraSpec& spec, int a, int b, int c, const std::vector<RatMatrix>& x,
                      const std::vector<RatMatrix>& y, const RatMatrix& z_of_z) {
  const auto count = static_cast<std::size_t>(spec.m() + 1);
  if (x.size() != count || y.size() != count) throw PreconditionError("need X(v_i), Y(v_i) for i = 0..m");
  std::vector<BlockMap> radical(spec.heisenberg_dim());
  for (std::size_t k = 0; k < count; ++k) {
    radical[k][{0, 1}] = x[k];
    radical[k][{1, 2}] = y[k];
  }
  radical.back()[{0, 2}] = z_of_z;
  return BlockRep::from_blocks(spec, {a, b, c}, radical);
}

std::vector<RatMatrix> radical_blocks(const BlockRep& rep, std::size_t i, std::size_t j) {
  std::vector<RatMatrix> out;
  for (int k = 0; k <= rep.spec().m(); ++k) out.push_back(rep.block(rep.spec().v(k), i, j));
  return out;
}

std::vector<FuncaViolation> verify_funca(const BlockRep& rep) {
  if (rep.length() != 3) throw PreconditionError("verify_funca requires a length-3 representation");
  const AlgebraSpec& spec = rep.spec();
  const int m = spec.m();
  const RatMatrix& z_of_z = rep.block(spec.z(), 0, 2);
  std::vector<FuncaViolation> out;
  for (int i = 0; i <= m; ++i)
    for (int j = 0; j <= m; ++j) {
      const RatMatrix& xi = rep.block(spec.v(i), 0, 1);
      const RatMatrix& xj = rep.block(spec.v(j), 0, 1);
      const RatMatrix& yi = rep.block(spec.v(i), 1, 2);
      const RatMatrix& yj = rep.block(spec.v(j), 1, 2);
      const Rational coeff = basis_bracket(spec, spec.v(i), spec.v(j))[spec.z()];
      if (xi * yj - xj * yi != z_of_z * coeff) out.push_back({i, j});
    }
  return out;
}

std::vector<HomomorphismViolation> verify_homomorphism(const BlockRep& rep) {
  const AlgebraSpec& spec = rep.spec();
  std::vector<HomomorphismViolation> out;
  for (std::size_t x = 0; x < spec.dim(); ++x)
    for (std::size_t y = 0; y < spec.dim(); ++y)
      if (rep.image(basis_bracket(spec, x, y)) != commutator(rep.generator(x), rep.generator(y)))
        out.push_back({x, y});
  return out;
}

bool is_uniserial(const BlockRep& rep) {
  const AlgebraSpec& spec = rep.spec();
  for (std::size_t i = 0; i + 1 < rep.length(); ++i) {
    bool nonzero = false;
    for (std::size_t g = spec.v(0); g < spec.dim() && !nonzero; ++g) nonzero = !rep.block(g, i, i + 1).is_zero();
    if (!nonzero) return false;
  }
  return true;
}

bool is_faithful(const BlockRep& rep) {
  return rank(flatten_rows(rep.generators())) == rep.spec().dim();
}

BlockRep dual(const BlockRep& rep) {
  const std::size_t l = rep.length();
  const std::size_t n = rep.dimension();
  SocleSequence reversed(rep.socle().rbegin(), rep.socle().rend());

  // New basis: factor i moves to position l-1-i, with w_k = (-1)^k C(a,k) v*_{a-k}.
  RatMatrix p(n, n);
  std::size_t new_offset = 0;
  for (std::size_t pos = 0; pos < l; ++pos) {
    const std::size_t i = l - 1 - pos;
    const int a = rep.socle()[i];
    for (int k = 0; k <= a; ++k) {
      const Rational c((k % 2 ? -1 : 1) * binomial(a, k));
      p(rep.offset(i) + static_cast<std::size_t>(a - k), new_offset + static_cast<std::size_t>(k)) = c;
    }
    new_offset += static_cast<std::size_t>(a + 1);
  }
  const RatMatrix p_inv = inverse(p);
  std::vector<RatMatrix> gens;
  for (const auto& g : rep.generators()) gens.push_back(p_inv * (-g.transpose()) * p);
  return BlockRep(rep.spec(), std::move(reversed), std::move(gens));
}

nlohmann::json to_json(const BlockRep& rep) {
  nlohmann::json gens = nlohmann::json::object();
  for (std::size_t g = 0; g < rep.spec().dim(); ++g) gens[rep.spec().basis_name(g)] = to_json(rep.generator(g));
  return {{"m", rep.spec().m()}, {"socle", rep.socle()}, {"generators", std::move(gens)}};
}

BlockRep block_rep_from_json(const nlohmann::json& j) {
  const AlgebraSpec spec = AlgebraSpec::from_m(j.at("m").get<int>());
  std::vector<RatMatrix> gens;
  for (std::size_t g = 0; g < spec.dim(); ++g)
    gens.push_back(rat_matrix_from_json(j.at("generators").at(spec.basis_name(g))));
  return BlockRep(spec, j.at("socle").get<SocleSequence>(), std::move(gens));
}

namespace {

// Entry (r, c) of R(sum a_k v_k + t z) as a linear form.
std::string linear_form(const BlockRep& rep, std::size_t i, std::size_t j, std::size_t r, std::size_t c) {
  const AlgebraSpec& spec = rep.spec();
  std::string out;
  for (std::size_t g = spec.v(0); g < spec.dim(); ++g) {
    const Rational& x = rep.block(g, i, j)(r, c);
    if (x.is_zero()) continue;
    const std::string var = g == spec.z() ? "t" : "a" + std::to_string(g - spec.v(0));
    std::string coeff = abs(x) == 1 ? "" : abs(x).str();
    if (!out.empty()) out += x.sign() < 0 ? "-" : "+";
    else if (x.sign() < 0) out += "-";
    out += coeff + var;
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string to_markdown(const BlockRep& rep) {
  const std::size_t l = rep.length();
  std::ostringstream os;
  os << "R(sum a_i v_i + t z), m = " << rep.spec().m() << ", socle factors " << socle_str(rep.socle()) << "\n\n";
  os << "|";
  for (std::size_t j = 0; j < l; ++j) os << " V(" << rep.socle()[j] << ") |";
  os << "\n|";
  for (std::size_t j = 0; j < l; ++j) os << "---|";
  os << "\n";
  for (std::size_t i = 0; i < l; ++i) {
    os << "|";
    for (std::size_t j = 0; j < l; ++j) {
      os << " ";
      if (i == j) {
        os << "R_" << rep.socle()[i] << "(s)";
      } else if (j > i) {
        bool any = false;
        std::ostringstream cell;
        for (std::size_t r = 0; r < rep.block_size(i); ++r) {
          if (r) cell << "<br>";
          for (std::size_t c = 0; c < rep.block_size(j); ++c) {
            const std::string f = linear_form(rep, i, j, r, c);
            any = any || f != "0";
            cell << (c ? " " : "") << f;
          }
        }
        if (any) os << cell.str();
      }
      os << " |";
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace uniserial
