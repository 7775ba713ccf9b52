#include "csurg/twist/octonion.hpp"

#include "csurg/error.hpp"

namespace csurg::twist {

namespace {

Vec quaternion_conjugate(const Vec& a) {
  Vec c = -a;
  c(0) = a(0);
  return c;
}

}  // namespace

Vec quaternion_multiply(const Vec& a, const Vec& b) {
  Vec c(4);
  c(0) = a(0) * b(0) - a(1) * b(1) - a(2) * b(2) - a(3) * b(3);
  c(1) = a(0) * b(1) + a(1) * b(0) + a(2) * b(3) - a(3) * b(2);
  c(2) = a(0) * b(2) - a(1) * b(3) + a(2) * b(0) + a(3) * b(1);
  c(3) = a(0) * b(3) + a(1) * b(2) - a(2) * b(1) + a(3) * b(0);
  return c;
}

Vec octonion_multiply(const Vec& x, const Vec& y) {
  if (x.size() != 8 || y.size() != 8)
    throw Error(ErrorCode::invalid_argument, "octonions have 8 components");
  const Vec a = x.head(4), b = x.tail(4), c = y.head(4), d = y.tail(4);
  Vec out(8);
  out.head(4) = quaternion_multiply(a, c) - quaternion_multiply(quaternion_conjugate(d), b);
  out.tail(4) = quaternion_multiply(d, a) + quaternion_multiply(b, quaternion_conjugate(c));
  return out;
}

Vec octonion_conjugate(const Vec& a) {
  Vec c = -a;
  c(0) = a(0);
  return c;
}

Vec octonion_cross(const Vec& x, const Vec& y) {
  if (x.size() != 7 || y.size() != 7)
    throw Error(ErrorCode::invalid_argument, "octonion cross product takes vectors in R^7");
  Vec a = Vec::Zero(8), b = Vec::Zero(8);
  a.tail(7) = x;
  b.tail(7) = y;
  return octonion_multiply(a, b).tail(7);
}

}  // namespace csurg::twist
