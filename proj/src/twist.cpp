#include "monodromy/twist.hpp"

#include "monodromy/errors.hpp"
#include "monodromy/hash.hpp"

namespace monodromy::twist
{

using linalg::Int;
using linalg::IntMatrix;
using linalg::IntVector;

std::string to_string(TwistWord const &w)
{
  std::string out;
  for (auto const &l : w) {
    if (!out.empty())
      out += ' ';
    out += "T_" + surface::to_string(l.curve);
    if (l.sign < 0)
      out += "^-1";
  }
  return out.empty() ? "1" : out;
}

TwistWord inverse(TwistWord const &w)
{
  TwistWord out(w.rbegin(), w.rend());
  for (auto &l : out)
    l.sign = -l.sign;
  return out;
}

namespace
{

void check_model(MappingClassMatrix const &m, HomologyModel const &model)
{
  if (m.model != model.fingerprint)
    throw Error(Errc::cross_model, "matrix belongs to a different homology model");
}

} // namespace

MappingClassMatrix identity(HomologyModel const &model)
{ return {IntMatrix::identity(model.rank()), model.fingerprint, "1"}; }

MappingClassMatrix dehn_twist(HomologyModel const &model, CurveId c, int sign)
{
  if (sign != 1 && sign != -1)
    throw Error(Errc::invalid_parameter, "twist sign must be +1 or -1");
  IntVector v = model.curve_class(c);
  IntVector Jv = model.form * std::span<Int const>(v);
  std::size_t r = model.rank();
  IntMatrix M = IntMatrix::identity(r);
  // <x,c> = x^T J c = (Jc)^T x
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      M(i, j) = linalg::sub(M(i, j), linalg::mul(sign, linalg::mul(v[i], Jv[j])));
  return {std::move(M), model.fingerprint, to_string(TwistWord{{c, sign}})};
}

MappingClassMatrix operator*(MappingClassMatrix const &a, MappingClassMatrix const &b)
{
  if (a.model != b.model)
    throw Error(Errc::cross_model, "composing matrices from different models");
  if (a.matrix.rows() != b.matrix.rows())
    throw Error(Errc::dimension, "composing matrices of different size");
  std::string prov = a.provenance.empty() || b.provenance.empty()
                       ? std::string()
                       : a.provenance + " " + b.provenance;
  return {a.matrix * b.matrix, a.model, std::move(prov)};
}

MappingClassMatrix compose(HomologyModel const &model, std::vector<MappingClassMatrix> const &ms)
{
  MappingClassMatrix out = identity(model);
  out.provenance.clear();
  for (auto const &m : ms) {
    check_model(m, model);
    if (m.matrix.rows() != model.rank() || m.matrix.cols() != model.rank())
      throw Error(Errc::dimension, "matrix size does not match the model");
    out.matrix = out.matrix * m.matrix;
  }
  return out;
}

bool is_symplectic(MappingClassMatrix const &m, HomologyModel const &model)
{
  check_model(m, model);
  if (m.matrix.rows() != model.rank() || !m.matrix.square())
    throw Error(Errc::dimension, "matrix size does not match the model");
  return m.matrix.transpose() * model.form * m.matrix == model.form;
}

IntVector act(MappingClassMatrix const &m, IntVector const &x)
{ return m.matrix * std::span<Int const>(x); }

MappingClassMatrix word_matrix(HomologyModel const &model, TwistWord const &w)
{
  // M * T_c^s = M - s (M c)(J c)^T, a rank-one update per letter
  std::size_t const r = model.rank();
  IntMatrix M = IntMatrix::identity(r);
  for (auto const &l : w) {
    if (l.sign != 1 && l.sign != -1)
      throw Error(Errc::invalid_parameter, "twist sign must be +1 or -1");
    IntVector v = model.curve_class(l.curve);
    IntVector Jv = model.form * std::span<Int const>(v);
    IntVector Mv = M * std::span<Int const>(v);
    for (std::size_t i = 0; i < r; ++i) {
      if (Mv[i] == 0)
        continue;
      Int k = linalg::mul(l.sign, Mv[i]);
      for (std::size_t j = 0; j < r; ++j)
        if (Jv[j] != 0)
          M(i, j) = linalg::sub(M(i, j), linalg::mul(k, Jv[j]));
    }
  }
  return {std::move(M), model.fingerprint, to_string(w)};
}

namespace
{

int reference_b(HomologyModel const &model)
{
  int n = 0;
  for (auto c : model.curves)
    if (c.family == surface::Family::Alpha)
      n = std::max(n, c.index);
  if (n < 3 || n % 2 == 0)
    throw Error(Errc::lookup, "model is not a reference configuration");
  return (n + 1) / 2;
}

} // namespace

MappingClassMatrix psi_reference(HomologyModel const &model)
{
  auto P = surface::induced_map(model, surface::psi_images(reference_b(model), surface::PsiRule::reference));
  return {std::move(P), model.fingerprint, "psi"};
}

MappingClassMatrix psi_variant(HomologyModel const &model)
{
  auto P = surface::induced_map(model, surface::psi_images(reference_b(model), surface::PsiRule::relabelled));
  return {std::move(P), model.fingerprint, "psi'"};
}

using nlohmann::ordered_json;

ordered_json to_json(MappingClassMatrix const &m)
{
  ordered_json j;
  j["model"] = hex64(m.model);
  j["rows"] = m.matrix.rows();
  j["cols"] = m.matrix.cols();
  j["data"] = m.matrix.data();
  if (!m.provenance.empty())
    j["provenance"] = m.provenance;
  return j;
}

MappingClassMatrix matrix_from_json(ordered_json const &j, HomologyModel const &model)
{
  try {
    if (j.at("model").get<std::string>() != hex64(model.fingerprint))
      throw Error(Errc::cross_model, "matrix belongs to a different homology model");
    auto rows = j.at("rows").get<std::size_t>();
    auto cols = j.at("cols").get<std::size_t>();
    auto data = j.at("data").get<std::vector<Int>>();
    if (rows != model.rank() || cols != model.rank() || data.size() != rows * cols)
      throw Error(Errc::dimension, "matrix size does not match the model");
    IntMatrix M(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c)
        M(r, c) = data[r * cols + c];
    return {std::move(M), model.fingerprint, j.value("provenance", std::string())};
  } catch (nlohmann::json::exception const &e) {
    throw Error(Errc::parse, e.what());
  }
}

ordered_json to_json(TwistWord const &w)
{
  auto j = ordered_json::array();
  for (auto const &l : w)
    j.push_back({{"curve", surface::to_string(l.curve)}, {"sign", l.sign}});
  return j;
}

TwistWord word_from_json(ordered_json const &j)
{
  try {
    TwistWord w;
    for (auto const &l : j) {
      int s = l.at("sign").get<int>();
      if (s != 1 && s != -1)
        throw Error(Errc::parse, "twist sign must be +1 or -1");
      w.push_back({surface::parse_curve(l.at("curve").get<std::string>()), s});
    }
    return w;
  } catch (nlohmann::json::exception const &e) {
    throw Error(Errc::parse, e.what());
  }
}

} // namespace monodromy::twist
