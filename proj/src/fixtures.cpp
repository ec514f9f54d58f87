#include "minrank/fixtures.hpp"

namespace minrank::fixtures {

IndexCodingProblem five_messages() {
  return make_problem(5, {
                             {{1, 2}, {4}},
                             {{3, 4}, {5, 1}},
                             {{5}, {2, 3}},
                         });
}

IndexCodingProblem ten_messages_five_receivers() {
  return make_problem(10, {
                              {{1, 2}, {3}},
                              {{3, 5}, {1, 4}},
                              {{4, 6}, {5, 9, 8}},
                              {{9}, {10, 7}},
                              {{7, 8, 10}, {2, 6}},
                          });
}

IndexCodingProblem ten_messages_three_receivers() {
  return make_problem(10, {
                              {{1, 6, 10}, {2, 4, 9}},
                              {{2, 4, 7, 9}, {3, 5, 8, 10}},
                              {{3, 5, 8}, {1, 6, 7}},
                          });
}

IndexCodingProblem twelve_messages() {
  return make_problem(12, {
                              {{1, 2, 3, 4}, {5, 9, 10, 11, 12}},
                              {{5, 6, 7}, {1, 2, 8}},
                              {{8, 9, 10, 11, 12}, {3, 4, 6, 7}},
                          });
}

std::vector<Fixture> reference_fixtures() {
  return {
      {"five-messages", five_messages(), 3, 8},
      {"ten-messages-five-receivers", ten_messages_five_receivers(), 7, 3888},
      {"ten-messages-three-receivers", ten_messages_three_receivers(), 7, 13824},
      {"twelve-messages", twelve_messages(), 8, 864000},
  };
}

}  // namespace minrank::fixtures
