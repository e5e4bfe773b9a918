// Embedding and isomorphism search between small bands.

#ifndef BANDSMP_EMBEDDING_HPP_
#define BANDSMP_EMBEDDING_HPP_

#include <algorithm>  // for sort, stable_sort
#include <cstddef>    // for size_t
#include <cstdint>    // for uint8_t
#include <optional>   // for optional, nullopt
#include <string>     // for to_string
#include <vector>     // for vector

#include "band.hpp"
#include "error.hpp"

namespace bandsmp {

  //! Maximum order of the small band in find_embedding by default.
  inline constexpr std::size_t default_embedding_bound = 17;

  namespace detail {

    // A short generating set: scan elements from the top J-classes down and
    // keep those not yet generated.
    inline std::vector<std::size_t> generating_set(Band const& band) {
      std::vector<std::size_t> order(band.order());
      for (std::size_t a = 0; a < band.order(); ++a) {
        order[a] = a;
      }
      // Elements with more elements J-below them come first.
      std::vector<std::size_t> below(band.order(), 0);
      for (std::size_t a = 0; a < band.order(); ++a) {
        for (std::size_t b = 0; b < band.order(); ++b) {
          below[a] += band.leq(Relation::J, b, a);
        }
      }
      std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
        return below[a] > below[b];
      });
      std::vector<std::size_t>  gens;
      std::vector<std::uint8_t> covered(band.order(), 0);
      for (std::size_t a : order) {
        if (covered[a]) {
          continue;
        }
        gens.push_back(a);
        for (std::size_t b : subsemigroup(band, gens)) {
          covered[b] = 1;
        }
      }
      return gens;
    }

    class EmbeddingSearch {
     public:
      EmbeddingSearch(Band const& small, Band const& big)
          : _small(small),
            _big(big),
            _gens(generating_set(small)),
            _image(small.order(), unmapped),
            _used(big.order(), 0) {}

      std::optional<std::vector<std::size_t>> run() {
        if (_small.order() > _big.order()) {
          return std::nullopt;
        }
        if (search(0)) {
          return _image;
        }
        return std::nullopt;
      }

     private:
      static constexpr std::size_t unmapped = static_cast<std::size_t>(-1);

      std::size_t j_size(Band const& band, std::size_t a) const {
        return band.j_class_members(band.j_class(a)).size();
      }

      // An injective homomorphism preserves and reflects all three
      // preorders, and maps a J-class injectively into a J-class.
      bool compatible(std::size_t g, std::size_t c) const {
        if (_used[c] || j_size(_big, c) < j_size(_small, g)) {
          return false;
        }
        for (std::size_t p = 0; p < _small.order(); ++p) {
          std::size_t const q = _image[p];
          if (q == unmapped) {
            continue;
          }
          for (Relation rel : {Relation::L, Relation::R, Relation::J}) {
            if (_small.leq(rel, g, p) != _big.leq(rel, c, q)
                || _small.leq(rel, p, g) != _big.leq(rel, q, c)) {
              return false;
            }
          }
        }
        return true;
      }

      // Propagates the partial map to all products of mapped elements.
      // Returns false on a conflict or loss of injectivity.
      bool propagate(std::vector<std::size_t>& mapped) {
        for (std::size_t i = 0; i < mapped.size(); ++i) {
          for (std::size_t j = 0; j <= i; ++j) {
            for (int side = 0; side < 2; ++side) {
              std::size_t const a = side == 0 ? mapped[i] : mapped[j];
              std::size_t const b = side == 0 ? mapped[j] : mapped[i];
              std::size_t const ab     = _small(a, b);
              std::size_t const target = _big(_image[a], _image[b]);
              if (_image[ab] == unmapped) {
                if (_used[target]) {
                  return false;
                }
                _image[ab]     = target;
                _used[target] = 1;
                mapped.push_back(ab);
              } else if (_image[ab] != target) {
                return false;
              }
            }
          }
        }
        return true;
      }

      bool search(std::size_t depth) {
        if (depth == _gens.size()) {
          return true;
        }
        std::size_t const g = _gens[depth];
        if (_image[g] != unmapped) {
          return search(depth + 1);
        }
        std::vector<std::size_t> candidates;
        for (std::size_t c = 0; c < _big.order(); ++c) {
          if (compatible(g, c)) {
            candidates.push_back(c);
          }
        }
        std::size_t const want = j_size(_small, g);
        std::stable_sort(
            candidates.begin(), candidates.end(), [&](auto a, auto b) {
              return j_size(_big, a) - want < j_size(_big, b) - want;
            });
        for (std::size_t c : candidates) {
          auto const saved_image = _image;
          auto const saved_used  = _used;
          _image[g]              = c;
          _used[c]               = 1;
          std::vector<std::size_t> mapped;
          for (std::size_t p = 0; p < _small.order(); ++p) {
            if (_image[p] != unmapped) {
              mapped.push_back(p);
            }
          }
          if (propagate(mapped) && search(depth + 1)) {
            return true;
          }
          _image = saved_image;
          _used  = saved_used;
        }
        return false;
      }

      Band const&               _small;
      Band const&               _big;
      std::vector<std::size_t>  _gens;
      std::vector<std::size_t>  _image;
      std::vector<std::uint8_t> _used;
    };

  }  // namespace detail

  //! An injective homomorphism small -> big as an element map, if one
  //! exists. Throws SizeBoundExceeded if small has more than bound elements.
  inline std::optional<std::vector<std::size_t>>
  find_embedding(Band const& small,
                 Band const& big,
                 std::size_t bound = default_embedding_bound) {
    if (small.order() > bound) {
      throw Error(ErrorCode::SizeBoundExceeded,
                  "band of order " + std::to_string(small.order())
                      + " exceeds the embedding search bound "
                      + std::to_string(bound));
    }
    return detail::EmbeddingSearch(small, big).run();
  }

  inline bool is_homomorphism(Band const&                     from,
                              Band const&                     to,
                              std::vector<std::size_t> const& map) {
    if (map.size() != from.order()) {
      return false;
    }
    for (std::size_t a = 0; a < from.order(); ++a) {
      for (std::size_t b = 0; b < from.order(); ++b) {
        if (map[a] >= to.order() || map[from(a, b)] != to(map[a], map[b])) {
          return false;
        }
      }
    }
    return true;
  }

  inline bool is_isomorphic(Band const& lhs,
                            Band const& rhs,
                            std::size_t bound = default_embedding_bound) {
    return lhs.order() == rhs.order()
           && find_embedding(lhs, rhs, bound).has_value();
  }

}  // namespace bandsmp

#endif  // BANDSMP_EMBEDDING_HPP_
