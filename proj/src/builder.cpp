#include "gpretzel/builder.hpp"

#include <string>

#include "gpretzel/errors.hpp"

namespace gpretzel {

namespace {
constexpr Port kUnconnected{-1, -1};
}

int DiagramBuilder::add_crossing() {
  nodes_.push_back({Kind::Crossing, std::vector<Port>(4, kUnconnected), std::vector<int>(4, 0)});
  return node_count() - 1;
}

int DiagramBuilder::add_junction() {
  nodes_.push_back({Kind::Junction, std::vector<Port>(2, kUnconnected), std::vector<int>(2, 0)});
  return node_count() - 1;
}

void DiagramBuilder::connect(Port a, Port b) {
  if (is_connected(a) || is_connected(b)) {
    throw InternalError("port connected twice (node " + std::to_string(a.node) + "/" +
                        std::to_string(b.node) + ")");
  }
  nodes_.at(a.node).partner.at(a.index) = b;
  nodes_.at(b.node).partner.at(b.index) = a;
}

void DiagramBuilder::connect_directed(Port from, Port to) {
  connect(from, to);
  nodes_[from.node].hint[from.index] = +1;
  nodes_[to.node].hint[to.index] = -1;
}

void DiagramBuilder::disconnect(Port p) {
  Port q = partner(p);
  nodes_.at(p.node).partner.at(p.index) = kUnconnected;
  nodes_.at(p.node).hint.at(p.index) = 0;
  if (q.node >= 0) {
    nodes_[q.node].partner[q.index] = kUnconnected;
    nodes_[q.node].hint[q.index] = 0;
  }
}

bool DiagramBuilder::is_connected(Port p) const {
  return nodes_.at(p.node).partner.at(p.index).node >= 0;
}

Port DiagramBuilder::partner(Port p) const { return nodes_.at(p.node).partner.at(p.index); }

void DiagramBuilder::dissolve(int node) {
  if (nodes_.at(node).kind != Kind::Crossing) throw InternalError("dissolve of a non-crossing node");
  nodes_[node].kind = Kind::Dissolved;
}

bool DiagramBuilder::is_crossing(int node) const { return nodes_.at(node).kind == Kind::Crossing; }

int DiagramBuilder::through(Port p) const {
  return nodes_[p.node].kind == Kind::Junction ? 1 - p.index : (p.index + 2) % 4;
}

Diagram DiagramBuilder::finalize() const {
  std::vector<int> crossing_id(nodes_.size(), -1);
  int crossing_total = 0;
  for (std::size_t n = 0; n < nodes_.size(); ++n) {
    for (std::size_t k = 0; k < nodes_[n].partner.size(); ++k) {
      if (nodes_[n].partner[k].node < 0) {
        throw InternalError("unconnected port " + std::to_string(k) + " on node " + std::to_string(n));
      }
    }
    if (nodes_[n].kind == Kind::Crossing) crossing_id[n] = crossing_total++;
  }

  std::vector<std::vector<bool>> visited(nodes_.size());
  for (std::size_t n = 0; n < nodes_.size(); ++n) visited[n].assign(nodes_[n].partner.size(), false);

  struct Arc {
    Port out;
    Port in;
  };
  std::vector<std::array<int, 4>> label(crossing_total);
  std::vector<std::array<bool, 4>> incoming(crossing_total);
  int next_label = 1;

  for (std::size_t n = 0; n < nodes_.size(); ++n) {
    if (nodes_[n].kind != Kind::Crossing) continue;
    for (int p0 = 0; p0 < 4; ++p0) {
      if (visited[n][p0]) continue;
      std::vector<Arc> arcs;
      int forward = 0;
      int backward = 0;
      auto vote_leave = [&](Port p) {
        int h = nodes_[p.node].hint[p.index];
        if (h > 0) ++forward;
        if (h < 0) ++backward;
      };
      auto vote_enter = [&](Port p) {
        int h = nodes_[p.node].hint[p.index];
        if (h < 0) ++forward;
        if (h > 0) ++backward;
      };
      Port entry{static_cast<int>(n), p0};
      const Port start = entry;
      do {
        visited[entry.node][entry.index] = true;
        Port exit{entry.node, through(entry)};
        visited[exit.node][exit.index] = true;
        vote_leave(exit);
        Port arc_start = exit;
        Port q = partner(exit);
        vote_enter(q);
        while (nodes_[q.node].kind != Kind::Crossing) {
          visited[q.node][q.index] = true;
          Port qx{q.node, through(q)};
          visited[qx.node][qx.index] = true;
          vote_leave(qx);
          q = partner(qx);
          vote_enter(q);
        }
        arcs.push_back({arc_start, q});
        entry = q;
      } while (!(entry == start));
      if (forward > 0 && backward > 0) {
        throw InputError("inconsistent orientation hints on a component");
      }
      if (backward > 0) {
        std::vector<Arc> rev;
        for (auto it = arcs.rbegin(); it != arcs.rend(); ++it) rev.push_back({it->in, it->out});
        arcs = std::move(rev);
      }
      for (const Arc& a : arcs) {
        int lab = next_label++;
        int co = crossing_id[a.out.node];
        int ci = crossing_id[a.in.node];
        label[co][a.out.index] = lab;
        incoming[co][a.out.index] = false;
        label[ci][a.in.index] = lab;
        incoming[ci][a.in.index] = true;
      }
    }
  }

  int loops = free_loops_;
  for (std::size_t n = 0; n < nodes_.size(); ++n) {
    for (std::size_t p0 = 0; p0 < nodes_[n].partner.size(); ++p0) {
      if (visited[n][p0]) continue;
      Port entry{static_cast<int>(n), static_cast<int>(p0)};
      const Port start = entry;
      do {
        visited[entry.node][entry.index] = true;
        Port exit{entry.node, through(entry)};
        visited[exit.node][exit.index] = true;
        entry = partner(exit);
      } while (!(entry == start));
      ++loops;
    }
  }

  std::vector<Crossing> crossings(crossing_total);
  std::vector<int> signs(crossing_total);
  for (int c = 0; c < crossing_total; ++c) {
    int r = incoming[c][0] ? 0 : 2;
    for (int k = 0; k < 4; ++k) crossings[c].slots[k] = label[c][(r + k) % 4];
    signs[c] = incoming[c][(r + 3) % 4] ? +1 : -1;
  }
  return Diagram(std::move(crossings), loops, std::move(signs));
}

DiagramBuilder DiagramBuilder::from_diagram(const Diagram& d) {
  DiagramBuilder b;
  for (int c = 0; c < d.crossing_count(); ++c) b.add_crossing();
  for (int lab = 1; lab <= d.arc_count(); ++lab) {
    auto ends = d.darts_of(lab);
    Port p0{ends[0].crossing, ends[0].slot};
    Port p1{ends[1].crossing, ends[1].slot};
    if (d.is_oriented()) {
      if (d.is_outgoing(ends[0])) {
        b.connect_directed(p0, p1);
      } else {
        b.connect_directed(p1, p0);
      }
    } else {
      b.connect(p0, p1);
    }
  }
  b.add_free_loops(d.free_loops());
  return b;
}

}  // namespace gpretzel
