#include <mchroma/serialize.hpp>
#include <mchroma/verify.hpp>

int main() {
  const auto s = mchroma::build_scheme(12);
  if (!mchroma::packing_certificate(s).pass) return 1;
  return mchroma::to_json(s)["n"] == 12 ? 0 : 1;
}
