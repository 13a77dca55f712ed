#include "mapenum/fixtures.hpp"

namespace mapenum {

const std::vector<OrientedFixture>& one_vertex_fixtures() {
  static const std::vector<OrientedFixture> fixtures = {
      {"4:1", {2, 1}},
      {"6:1", {5, 10}},
      {"8:1", {14, 70, 21}},
      {"10:1", {42, 420, 483}},
      {"12:1", {132, 2310, 6468, 1485}},
      {"14:1", {429, 12012, 66066, 56628}},
      {"16:1", {1430, 60060, 570570, 1169740, 225225}},
      {"18:1", {4862, 291720, 4390386, 17454580, 12317877}},
      {"20:1", {16796, 1385670, 31039008, 211083730, 351683046, 59520825}},
  };
  return fixtures;
}

const std::vector<OrientedFixture>& two_vertex_fixtures() {
  static const std::vector<OrientedFixture> fixtures = {
      {"3:2", {12, 3}},
      {"4:2", {36, 60}},
      {"5:2", {180, 600, 165}},
      {"6:2", {600, 4800, 4770}},
      {"7:2", {2800, 34300, 81340, 16695}},
      {"8:2", {9800, 215600, 1009400, 781200}},
      {"9:2", {44100, 1323000, 10478160, 19158300, 3455865}},
      {"10:2", {158760, 7408800, 94091760, 333774000, 218402730}},
  };
  return fixtures;
}

const std::vector<OrientedFixture>& four_valent_fixtures() {
  static const std::vector<OrientedFixture> fixtures = {
      {"4:1", {2, 1}},
      {"4:2", {36, 60}},
      {"4:3", {1728, 6336, 1440}},
      {"4:4", {145152, 964224, 770688}},
      {"4:5", {17915904, 192098304, 348033024, 58060800}},
  };
  return fixtures;
}

const std::vector<OrientedFixture>& mixed_fixtures() {
  static const std::vector<OrientedFixture> fixtures = {
      {"3:2,4:1", {432, 468}},
      {"3:1,4:1,5:1", {2160, 6480, 1440}},
  };
  return fixtures;
}

std::vector<OrientedFixture> all_oriented_fixtures() {
  std::vector<OrientedFixture> all;
  for (const auto* group : {&one_vertex_fixtures(), &two_vertex_fixtures(),
                            &four_valent_fixtures(), &mixed_fixtures()})
    all.insert(all.end(), group->begin(), group->end());
  return all;
}

} // namespace mapenum
