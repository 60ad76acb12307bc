#include "hk/perm.hpp"

#include <cctype>
#include <numeric>

#include "hk/error.hpp"

namespace hk {

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p]) {
      throw Error(ErrorCode::InvalidPermutation, "image list is not a bijection");
    }
    seen[p] = true;
  }
}

Perm Perm::identity(std::size_t degree) {
  std::vector<Point> im(degree);
  std::iota(im.begin(), im.end(), Point{0});
  Perm p;
  p.images_ = std::move(im);
  return p;
}

Perm Perm::from_one_based(const std::vector<long long>& images) {
  std::vector<Point> im;
  im.reserve(images.size());
  for (long long v : images) {
    if (v < 1 || v > static_cast<long long>(images.size())) {
      throw Error(ErrorCode::InvalidPermutation, "image " + std::to_string(v) + " outside 1.." + std::to_string(images.size()));
    }
    im.push_back(static_cast<Point>(v - 1));
  }
  return Perm(std::move(im));
}

Perm Perm::from_cycles(std::size_t degree, std::string_view text) {
  std::vector<Point> im(degree);
  std::iota(im.begin(), im.end(), Point{0});
  std::vector<bool> used(degree, false);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw Error(ErrorCode::InvalidPermutation, "expected '(' in cycle notation");
    ++i;
    std::vector<Point> cycle;
    while (true) {
      skip_ws();
      if (i >= text.size()) throw Error(ErrorCode::InvalidPermutation, "unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {
        ++i;
        continue;
      }
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i) throw Error(ErrorCode::InvalidPermutation, "bad character in cycle notation");
      long long v = std::stoll(std::string(text.substr(start, i - start)));
      if (v < 1 || v > static_cast<long long>(degree)) {
        throw Error(ErrorCode::InvalidPermutation, "point " + std::to_string(v) + " outside 1.." + std::to_string(degree));
      }
      cycle.push_back(static_cast<Point>(v - 1));
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      Point from = cycle[k];
      if (used[from]) throw Error(ErrorCode::InvalidPermutation, "point repeated in cycle notation");
      used[from] = true;
      im[from] = cycle[(k + 1) % cycle.size()];
    }
    skip_ws();
  }
  return Perm(std::move(im));
}

bool Perm::is_identity() const {
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (images_[x] != x) return false;
  }
  return true;
}

Perm Perm::inverse() const {
  Perm r;
  r.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) r.images_[images_[x]] = static_cast<Point>(x);
  return r;
}

std::size_t Perm::order() const {
  std::size_t result = 1;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (seen[x]) continue;
    std::size_t len = 0;
    for (std::size_t y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::vector<long long> Perm::one_based() const {
  std::vector<long long> out;
  out.reserve(images_.size());
  for (Point p : images_) out.push_back(static_cast<long long>(p) + 1);
  return out;
}

std::string Perm::cycle_string() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (seen[x] || images_[x] == x) continue;
    out += "(";
    bool first = true;
    for (std::size_t y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      if (!first) out += " ";
      out += std::to_string(y + 1);
      first = false;
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

Perm operator*(const Perm& a, const Perm& b) {
  Perm r;
  r.images_.resize(a.images_.size());
  for (std::size_t x = 0; x < a.images_.size(); ++x) r.images_[x] = b.images_[a.images_[x]];
  return r;
}

}  // namespace hk
