#include "dimon/factorize.hpp"

#include "dimon/dihedral.hpp"
#include "dimon/error.hpp"

namespace dimon {

namespace {

void append_power(Word& w, GenName name, int count) {
  for (int c = 0; c < count; ++c) w.push_back(name);
}

// An ODI element written as id_{Ω \ drop} followed by a word over
// x, y, x_i, y_i.
struct OdiFactor {
  PointSet drop;
  Word tail;
};

OdiFactor reflection_restriction(int n, int k, int i, int j) {
  if (!(1 <= i && i <= k && k < j && j <= n)) {
    throw DomainError("reflection restriction needs 1 <= i <= k < j <= n");
  }
  int const m = (n - 1) / 2;
  OdiFactor f;
  if (2 * (j - i) == n) {
    // Antipodal pair: hg^k shifts both points by k - 2i + 1.
    f.drop = PointSet::range(1, n) - PointSet{i, j};
    int const shift = k - 2 * i + 1;
    if (shift > 0) append_power(f.tail, gen_x(), shift);
    if (shift < 0) append_power(f.tail, gen_y(), -shift);
    return f;
  }
  int const t = j - i;
  append_power(f.tail, gen_y(), i - 1);
  f.tail.push_back(t <= m ? gen_xi(t) : gen_yi(n - t));
  append_power(f.tail, gen_x(), k - i);
  return f;
}

OdiFactor odi_factor(PartialPerm const& a) {
  int const n = a.degree();
  auto const ext = extensions(a);
  // Canonical order puts rotations first, then smaller exponents.
  DihedralElement const& s = ext.front();
  PointSet const dom = a.domain();
  if (s.reflects()) {
    auto const pts = dom.to_vector();
    return reflection_restriction(n, s.rotation(), pts[0], pts[1]);
  }
  int const k = s.rotation();
  OdiFactor f;
  if (k == 0) {
    f.drop = PointSet::range(1, n) - dom;
  } else if (dom.is_subset_of(PointSet::range(1, n - k))) {
    f.drop = PointSet::range(1, n - k) - dom;
    append_power(f.tail, gen_x(), k);
  } else {
    f.drop = PointSet::range(n - k + 1, n) - dom;
    append_power(f.tail, gen_y(), n - k);
  }
  return f;
}

// Drops adjacent h h pairs.
Word cancel_involutions(Word const& w) {
  Word out;
  for (GenName name : w) {
    if (name == gen_h() && !out.empty() && out.back() == gen_h()) {
      out.pop_back();
    } else {
      out.push_back(name);
    }
  }
  return out;
}

// Collapses each run of g's modulo n.
Word reduce_rotations(Word const& w, int n) {
  Word out;
  int run = 0;
  auto flush = [&] {
    append_power(out, gen_g(), run % n);
    run = 0;
  };
  for (GenName name : w) {
    if (name == gen_g()) {
      ++run;
    } else {
      flush();
      out.push_back(name);
    }
  }
  flush();
  return out;
}

Word odi_word(OdiFactor const& f, int n) {
  Word w;
  for (int l : f.drop.to_vector()) {
    if (l == 1) {
      w.insert(w.end(), {gen_y(), gen_x()});  // e_1 = yx
    } else if (l == n) {
      w.insert(w.end(), {gen_x(), gen_y()});  // e_n = xy
    } else {
      w.push_back(gen_e(l));
    }
  }
  w.insert(w.end(), f.tail.begin(), f.tail.end());
  return w;
}

// Rewrites an ODI word with y = hxh and e_l = h e_(n-l+1) h.
Word to_mdi(Word const& odi, int n) {
  Word w;
  int const top = (n + 1) / 2;
  for (GenName name : odi) {
    if (name == gen_y()) {
      w.insert(w.end(), {gen_h(), gen_x(), gen_h()});
    } else if (name.symbol == Symbol::e && name.index > top) {
      w.insert(w.end(), {gen_h(), gen_e(n - name.index + 1), gen_h()});
    } else {
      w.push_back(name);
    }
  }
  return w;
}

// id_{Ω \ drop} over g and e_n, using e_l = g^(n-l) e_n g^l with the
// dropped points taken in descending order so the rotations telescope.
Word opdi_partial_identity(PointSet drop, int n) {
  Word w;
  auto pts = drop.to_vector();
  for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
    append_power(w, gen_g(), n - *it);
    w.push_back(gen_e(n));
    append_power(w, gen_g(), *it);
  }
  return w;
}

Word opdi_word(PartialPerm const& a) {
  int const n = a.degree();
  int const m = (n - 1) / 2;
  auto const ext = extensions(a);
  PointSet const dom = a.domain();
  Word w;
  if (!ext.front().reflects()) {
    w = opdi_partial_identity(PointSet::range(1, n) - dom, n);
    append_power(w, gen_g(), ext.front().rotation());
    return reduce_rotations(w, n);
  }
  // Only rank-2 maps extend to a reflection and not to a rotation. Rotate
  // a to 1, swap the far point with x_t (or y_u = g^u x_u g^u), rotate back.
  auto const pairs = a.pairs();
  int const lo = pairs[0].from;
  int const hi = pairs[1].from;
  int const t = hi - lo;
  w = opdi_partial_identity(PointSet::range(1, n) - dom, n);
  append_power(w, gen_g(), n - lo + 1);
  if (t <= m) {
    w.push_back(gen_xi(t));
  } else {
    int const u = n - t;
    append_power(w, gen_g(), u);
    w.push_back(gen_xi(u));
    append_power(w, gen_g(), u);
  }
  append_power(w, gen_g(), pairs[0].to - 1);
  return reduce_rotations(w, n);
}

}  // namespace

Word reflection_restriction_word(int n, int k, int i, int j) {
  return odi_word(reflection_restriction(n, k, i, j), n);
}

Word factorize(PartialPerm const& a, MonoidKind kind) {
  if (kind == MonoidKind::DI) {
    throw DomainError("factorize supports odi, mdi and opdi");
  }
  if (!is_member(a, kind)) {
    throw NotMemberError(to_string(a) + " is not in " + to_string(kind) + "_" +
                         std::to_string(a.degree()));
  }
  int const n = a.degree();
  switch (kind) {
    case MonoidKind::ODI:
      return odi_word(odi_factor(a), n);
    case MonoidKind::MDI: {
      if (classify_order(a).order_preserving) {
        return cancel_involutions(to_mdi(odi_word(odi_factor(a), n), n));
      }
      // a = (ah)h with ah order-preserving.
      PartialPerm const ah = compose(a, generator_value(gen_h(), n));
      Word w = to_mdi(odi_word(odi_factor(ah), n), n);
      w.push_back(gen_h());
      return cancel_involutions(w);
    }
    case MonoidKind::OPDI:
      return opdi_word(a);
    case MonoidKind::DI:
      break;
  }
  return {};
}

}  // namespace dimon
