// Tuples in a direct power S^n, componentwise operations, and the
// breadth-first closure oracle for <A>.

#ifndef BANDSMP_POWER_HPP_
#define BANDSMP_POWER_HPP_

#include <algorithm>      // for equal
#include <cstddef>        // for size_t
#include <initializer_list>  // for initializer_list
#include <functional>     // for hash
#include <optional>       // for optional
#include <span>           // for span
#include <string>         // for string, to_string
#include <unordered_set>  // for unordered_set
#include <utility>        // for move
#include <vector>         // for vector

#include "band.hpp"
#include "error.hpp"

namespace bandsmp {

  using Tuple = std::vector<element_type>;

  //! Default maximum number of tuples the closure oracle may generate.
  inline constexpr std::size_t default_closure_cap = 5'000'000;

  namespace detail {
    inline void check_tuple(Band const& band, Tuple const& t, std::size_t n) {
      if (t.size() != n) {
        throw Error(ErrorCode::ArityMismatch,
                    "tuple of length " + std::to_string(t.size())
                        + " where arity " + std::to_string(n) + " is expected");
      }
      for (auto a : t) {
        band.check_element(a);
      }
    }

    inline void check_same_arity(Tuple const& a, Tuple const& b) {
      if (a.size() != b.size()) {
        throw Error(ErrorCode::ArityMismatch,
                    "tuples of lengths " + std::to_string(a.size()) + " and "
                        + std::to_string(b.size()));
      }
    }

    // Unchecked componentwise product into out.
    inline void mul_into(Band const&                  band,
                         std::span<element_type const> a,
                         std::span<element_type const> b,
                         std::span<element_type>       out) noexcept {
      for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = band(a[i], b[i]);
      }
    }

    inline bool leq_unchecked(Band const&  band,
                              Relation     rel,
                              Tuple const& a,
                              Tuple const& b) noexcept {
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (!band.leq(rel, a[i], b[i])) {
          return false;
        }
      }
      return true;
    }
  }  // namespace detail

  //! Componentwise product in S^n.
  inline Tuple mul(Band const& band, Tuple const& a, Tuple const& b) {
    detail::check_same_arity(a, b);
    Tuple out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      band.check_element(a[i]);
      band.check_element(b[i]);
      out[i] = band(a[i], b[i]);
    }
    return out;
  }

  //! Left-to-right product of a nonempty list of tuples.
  inline Tuple mul(Band const& band, std::initializer_list<Tuple const*> ts) {
    auto it  = ts.begin();
    Tuple out = **it;
    for (++it; it != ts.end(); ++it) {
      out = mul(band, out, **it);
    }
    return out;
  }

  //! Componentwise preorder; equals the preorder of the band S^n.
  inline bool preorder_cw(Band const&  band,
                          Relation     rel,
                          Tuple const& a,
                          Tuple const& b) {
    detail::check_same_arity(a, b);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!band.preorder(rel, a[i], b[i])) {
        return false;
      }
    }
    return true;
  }

  inline bool equivalent_cw(Band const&  band,
                            Relation     rel,
                            Tuple const& a,
                            Tuple const& b) {
    return preorder_cw(band, rel, a, b) && preorder_cw(band, rel, b, a);
  }

  //! A generator set A in S^n: distinct tuples in a fixed order.
  struct GenSet {
    std::size_t        arity = 0;
    std::vector<Tuple> members;

    [[nodiscard]] std::size_t size() const noexcept {
      return members.size();
    }

    [[nodiscard]] Tuple const& operator[](std::size_t i) const {
      return members[i];
    }
  };

  //! Validates the tuples and drops repeated ones, keeping first occurrences.
  inline GenSet make_genset(Band const& band,
                            std::size_t arity,
                            std::vector<Tuple> tuples) {
    GenSet gens{arity, {}};
    for (auto& t : tuples) {
      detail::check_tuple(band, t, arity);
      bool repeated = false;
      for (auto const& u : gens.members) {
        repeated = repeated || u == t;
      }
      if (!repeated) {
        gens.members.push_back(std::move(t));
      }
    }
    return gens;
  }

  struct SmpInstance {
    GenSet generators;
    Tuple  target;
  };

  inline SmpInstance make_instance(Band const&        band,
                                   std::size_t        arity,
                                   std::vector<Tuple> generators,
                                   Tuple              target) {
    detail::check_tuple(band, target, arity);
    return {make_genset(band, arity, std::move(generators)), std::move(target)};
  }

  //! Breadth-first enumeration of <A> by right multiplication with the
  //! generators. Tuples are stored contiguously; each found tuple remembers
  //! its parent and the generator that produced it, so a shortest generator
  //! word can be read off for every element.
  class Closure {
   public:
    static constexpr std::size_t no_parent = static_cast<std::size_t>(-1);

    Closure(Band const& band, GenSet const& gens)
        : _band(band),
          _gens(gens),
          _set(16, Hash{this}, Eq{this}) {}

    Closure(Closure const&)            = delete;
    Closure& operator=(Closure const&) = delete;

    //! Runs until <A> is exhausted, target is found (if given), or the cap
    //! is exceeded (CapExceeded).
    void run(std::size_t cap, Tuple const* target = nullptr) {
      std::size_t const n = _gens.arity;
      if (_size == 0) {
        for (std::size_t g = 0; g < _gens.size(); ++g) {
          if (add(_gens[g], no_parent, g, cap) && target != nullptr
              && *target == _gens[g]) {
            _found = _size - 1;
            return;
          }
        }
      }
      Tuple scratch(n);
      for (; _next < _size; ++_next) {
        for (std::size_t g = 0; g < _gens.size(); ++g) {
          detail::mul_into(_band, at(_next), _gens[g], scratch);
          if (add(scratch, _next, g, cap) && target != nullptr
              && *target == scratch) {
            _found = _size - 1;
            return;
          }
        }
      }
    }

    [[nodiscard]] std::size_t size() const noexcept {
      return _size;
    }

    [[nodiscard]] std::span<element_type const> at(std::size_t i) const {
      std::size_t const n = _gens.arity;
      return {_store.data() + i * n, n};
    }

    [[nodiscard]] Tuple tuple(std::size_t i) const {
      auto s = at(i);
      return Tuple(s.begin(), s.end());
    }

    [[nodiscard]] std::optional<std::size_t> find(Tuple const& t) const {
      if (t.size() != _gens.arity) {
        return std::nullopt;
      }
      _probe  = {t.data(), t.size()};
      auto it = _set.find(probe_index);
      if (it == _set.end()) {
        return std::nullopt;
      }
      return *it;
    }

    [[nodiscard]] std::optional<std::size_t> found() const noexcept {
      return _found;
    }

    //! 0-based generator indices whose product is element i.
    [[nodiscard]] std::vector<std::size_t> word(std::size_t i) const {
      std::vector<std::size_t> w;
      while (i != no_parent) {
        w.push_back(_via[i]);
        i = _parent[i];
      }
      return {w.rbegin(), w.rend()};
    }

    [[nodiscard]] std::vector<Tuple> elements() const {
      std::vector<Tuple> out;
      out.reserve(_size);
      for (std::size_t i = 0; i < _size; ++i) {
        out.push_back(tuple(i));
      }
      return out;
    }

   private:
    static constexpr std::size_t probe_index = static_cast<std::size_t>(-2);

    std::span<element_type const> key(std::size_t i) const {
      if (i == probe_index) {
        return _probe;
      }
      return at(i);
    }

    struct Hash {
      Closure const* self;
      std::size_t    operator()(std::size_t i) const noexcept {
        std::size_t h = 1469598103934665603ULL;
        for (auto a : self->key(i)) {
          h = (h ^ a) * 1099511628211ULL;
        }
        return h;
      }
    };

    struct Eq {
      Closure const* self;
      bool           operator()(std::size_t i, std::size_t j) const noexcept {
        auto a = self->key(i);
        auto b = self->key(j);
        return std::equal(a.begin(), a.end(), b.begin(), b.end());
      }
    };

    bool add(std::span<element_type const> t,
             std::size_t                   parent,
             std::size_t                   via,
             std::size_t                   cap) {
      _probe             = t;
      bool const present = _set.find(probe_index) != _set.end();
      if (present) {
        return false;
      }
      if (_size >= cap) {
        throw Error(ErrorCode::CapExceeded,
                    "closure exceeded " + std::to_string(cap)
                        + " tuples (size so far " + std::to_string(_size) + ")");
      }
      _store.insert(_store.end(), t.begin(), t.end());
      _parent.push_back(parent);
      _via.push_back(via);
      _set.insert(_size++);
      return true;
    }

    Band const&                                     _band;
    GenSet const&                                   _gens;
    std::vector<element_type>                       _store;
    std::vector<std::size_t>                        _parent;
    std::vector<std::size_t>                        _via;
    std::unordered_set<std::size_t, Hash, Eq>       _set;
    mutable std::span<element_type const>           _probe;
    std::size_t                                     _size  = 0;
    std::size_t                                     _next  = 0;
    std::optional<std::size_t>                      _found;
  };

  //! All of <A> in breadth-first insertion order.
  inline std::vector<Tuple> closure(Band const&   band,
                                    GenSet const& gens,
                                    std::size_t   cap = default_closure_cap) {
    Closure c(band, gens);
    c.run(cap);
    return c.elements();
  }

  //! Exact membership b in <A>, stopping as soon as b is generated.
  inline bool member_closure(Band const&   band,
                             GenSet const& gens,
                             Tuple const&  target,
                             std::size_t   cap = default_closure_cap) {
    detail::check_tuple(band, target, gens.arity);
    Closure c(band, gens);
    c.run(cap, &target);
    return c.found().has_value();
  }

  //! A shortest generator word (0-based indices) for target, if it is in <A>.
  inline std::optional<std::vector<std::size_t>>
  witness_word(Band const&   band,
               GenSet const& gens,
               Tuple const&  target,
               std::size_t   cap = default_closure_cap) {
    detail::check_tuple(band, target, gens.arity);
    Closure c(band, gens);
    c.run(cap, &target);
    if (auto i = c.found()) {
      return c.word(*i);
    }
    return std::nullopt;
  }

}  // namespace bandsmp

#endif  // BANDSMP_POWER_HPP_
