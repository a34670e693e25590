#pragma once

// Primal-dual maximum-weight matching on general graphs, O(n^3).
//
// Follows the classic blossom-shrinking scheme with doubled vertex duals:
// slack(k) = dual[i] + dual[j] - 2 w(k), so only delta3 ever halves a value.
// The weight type W must form an ordered abelian group with W{} as zero and
// a free function half(const W&) that is exact on even slacks.

#include <algorithm>
#include <cassert>
#include <optional>
#include <stdexcept>
#include <vector>

namespace matchvote::detail {

template <class W>
struct BlossomEdge {
    int u;
    int v;
    W weight;
};

template <class W>
class Blossom {
public:
    Blossom(int n, std::vector<BlossomEdge<W>> edges) : n_(n), edges_(std::move(edges)) {}

    /// Partner of every vertex, or -1.
    std::vector<int> solve() {
        std::vector<int> out(static_cast<std::size_t>(n_), -1);
        if (edges_.empty()) return out;
        init();
        run();
        for (int v = 0; v < n_; ++v)
            if (mate_[v] >= 0) out[static_cast<std::size_t>(v)] = endpoint_[mate_[v]];
        return out;
    }

private:
    int n_;
    std::vector<BlossomEdge<W>> edges_;

    std::vector<int> endpoint_;
    std::vector<std::vector<int>> neighbend_;
    std::vector<int> mate_;
    std::vector<int> label_;
    std::vector<int> labelend_;
    std::vector<int> inblossom_;
    std::vector<int> blossomparent_;
    std::vector<std::vector<int>> blossomchilds_;
    std::vector<int> blossombase_;
    std::vector<std::vector<int>> blossomendps_;
    std::vector<int> bestedge_;
    std::vector<std::optional<std::vector<int>>> blossombestedges_;
    std::vector<int> unusedblossoms_;
    std::vector<W> dualvar_;
    std::vector<char> allowedge_;
    std::vector<int> queue_;

    static int wrap(int j, std::size_t size) {
        const int s = static_cast<int>(size);
        return ((j % s) + s) % s;
    }

    W slack(int k) const {
        const auto& e = edges_[static_cast<std::size_t>(k)];
        return dualvar_[e.u] + dualvar_[e.v] - (e.weight + e.weight);
    }

    void leaves(int b, std::vector<int>& out) const {
        if (b < n_) {
            out.push_back(b);
            return;
        }
        for (int t : blossomchilds_[b]) leaves(t, out);
    }

    std::vector<int> leaves(int b) const {
        std::vector<int> out;
        leaves(b, out);
        return out;
    }

    void init() {
        const int m = static_cast<int>(edges_.size());
        W maxweight = edges_.front().weight;
        for (const auto& e : edges_) {
            if (e.u == e.v || e.u < 0 || e.v < 0 || e.u >= n_ || e.v >= n_)
                throw std::invalid_argument("blossom: invalid edge");
            if (maxweight < e.weight) maxweight = e.weight;
        }
        if (maxweight < W{}) maxweight = W{};
        endpoint_.resize(static_cast<std::size_t>(2 * m));
        neighbend_.assign(static_cast<std::size_t>(n_), {});
        for (int k = 0; k < m; ++k) {
            endpoint_[2 * k] = edges_[k].u;
            endpoint_[2 * k + 1] = edges_[k].v;
            neighbend_[edges_[k].u].push_back(2 * k + 1);
            neighbend_[edges_[k].v].push_back(2 * k);
        }
        mate_.assign(static_cast<std::size_t>(n_), -1);
        label_.assign(static_cast<std::size_t>(2 * n_), 0);
        labelend_.assign(static_cast<std::size_t>(2 * n_), -1);
        inblossom_.resize(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v) inblossom_[v] = v;
        blossomparent_.assign(static_cast<std::size_t>(2 * n_), -1);
        blossomchilds_.assign(static_cast<std::size_t>(2 * n_), {});
        blossombase_.assign(static_cast<std::size_t>(2 * n_), -1);
        for (int v = 0; v < n_; ++v) blossombase_[v] = v;
        blossomendps_.assign(static_cast<std::size_t>(2 * n_), {});
        bestedge_.assign(static_cast<std::size_t>(2 * n_), -1);
        blossombestedges_.assign(static_cast<std::size_t>(2 * n_), std::nullopt);
        unusedblossoms_.clear();
        for (int b = n_; b < 2 * n_; ++b) unusedblossoms_.push_back(b);
        dualvar_.assign(static_cast<std::size_t>(2 * n_), W{});
        for (int v = 0; v < n_; ++v) dualvar_[v] = maxweight;
        allowedge_.assign(static_cast<std::size_t>(m), 0);
    }

    void assign_label(int w, int t, int p) {
        const int b = inblossom_[w];
        assert(label_[w] == 0 && label_[b] == 0);
        label_[w] = label_[b] = t;
        labelend_[w] = labelend_[b] = p;
        bestedge_[w] = bestedge_[b] = -1;
        if (t == 1) {
            leaves(b, queue_);
        } else if (t == 2) {
            const int base = blossombase_[b];
            assert(mate_[base] >= 0);
            assign_label(endpoint_[mate_[base]], 1, mate_[base] ^ 1);
        }
    }

    int scan_blossom(int v, int w) {
        std::vector<int> path;
        int base = -1;
        while (v != -1 || w != -1) {
            int b = inblossom_[v];
            if (label_[b] & 4) {
                base = blossombase_[b];
                break;
            }
            assert(label_[b] == 1);
            path.push_back(b);
            label_[b] = 5;
            if (labelend_[b] == -1) {
                v = -1;
            } else {
                v = endpoint_[labelend_[b]];
                b = inblossom_[v];
                assert(label_[b] == 2);
                assert(labelend_[b] >= 0);
                v = endpoint_[labelend_[b]];
            }
            if (w != -1) std::swap(v, w);
        }
        for (int b : path) label_[b] = 1;
        return base;
    }

    void add_blossom(int base, int k) {
        int v = edges_[k].u;
        int w = edges_[k].v;
        const int bb = inblossom_[base];
        int bv = inblossom_[v];
        int bw = inblossom_[w];
        const int b = unusedblossoms_.back();
        unusedblossoms_.pop_back();
        blossombase_[b] = base;
        blossomparent_[b] = -1;
        blossomparent_[bb] = b;
        std::vector<int> path;
        std::vector<int> endps;
        while (bv != bb) {
            blossomparent_[bv] = b;
            path.push_back(bv);
            endps.push_back(labelend_[bv]);
            assert(label_[bv] == 2 || (label_[bv] == 1 && labelend_[bv] == mate_[blossombase_[bv]]));
            assert(labelend_[bv] >= 0);
            v = endpoint_[labelend_[bv]];
            bv = inblossom_[v];
        }
        path.push_back(bb);
        std::reverse(path.begin(), path.end());
        std::reverse(endps.begin(), endps.end());
        endps.push_back(2 * k);
        while (bw != bb) {
            blossomparent_[bw] = b;
            path.push_back(bw);
            endps.push_back(labelend_[bw] ^ 1);
            assert(label_[bw] == 2 || (label_[bw] == 1 && labelend_[bw] == mate_[blossombase_[bw]]));
            assert(labelend_[bw] >= 0);
            w = endpoint_[labelend_[bw]];
            bw = inblossom_[w];
        }
        assert(label_[bb] == 1);
        blossomchilds_[b] = path;
        blossomendps_[b] = endps;
        label_[b] = 1;
        labelend_[b] = labelend_[bb];
        dualvar_[b] = W{};
        for (int leaf : leaves(b)) {
            if (label_[inblossom_[leaf]] == 2) queue_.push_back(leaf);
            inblossom_[leaf] = b;
        }
        std::vector<int> bestedgeto(static_cast<std::size_t>(2 * n_), -1);
        for (int child : path) {
            std::vector<std::vector<int>> nblists;
            if (!blossombestedges_[child]) {
                for (int leaf : leaves(child)) {
                    std::vector<int> list;
                    for (int p : neighbend_[leaf]) list.push_back(p / 2);
                    nblists.push_back(std::move(list));
                }
            } else {
                nblists.push_back(*blossombestedges_[child]);
            }
            for (const auto& nblist : nblists) {
                for (int kk : nblist) {
                    int i = edges_[kk].u;
                    int j = edges_[kk].v;
                    if (inblossom_[j] == b) std::swap(i, j);
                    const int bj = inblossom_[j];
                    if (bj != b && label_[bj] == 1 && (bestedgeto[bj] == -1 || slack(kk) < slack(bestedgeto[bj])))
                        bestedgeto[bj] = kk;
                }
            }
            blossombestedges_[child].reset();
            bestedge_[child] = -1;
        }
        std::vector<int> best;
        for (int kk : bestedgeto)
            if (kk != -1) best.push_back(kk);
        blossombestedges_[b] = best;
        bestedge_[b] = -1;
        for (int kk : best)
            if (bestedge_[b] == -1 || slack(kk) < slack(bestedge_[b])) bestedge_[b] = kk;
    }

    void expand_blossom(int b, bool endstage) {
        const std::vector<int> childs = blossomchilds_[b];
        for (int s : childs) {
            blossomparent_[s] = -1;
            if (s < n_) {
                inblossom_[s] = s;
            } else if (endstage && dualvar_[s] == W{}) {
                expand_blossom(s, endstage);
            } else {
                for (int leaf : leaves(s)) inblossom_[leaf] = s;
            }
        }
        if (!endstage && label_[b] == 2) {
            assert(labelend_[b] >= 0);
            const auto& ch = blossomchilds_[b];
            const auto& ep = blossomendps_[b];
            const int entrychild = inblossom_[endpoint_[labelend_[b] ^ 1]];
            int j = static_cast<int>(std::find(ch.begin(), ch.end(), entrychild) - ch.begin());
            int jstep = 0;
            int endptrick = 0;
            if (j & 1) {
                j -= static_cast<int>(ch.size());
                jstep = 1;
                endptrick = 0;
            } else {
                jstep = -1;
                endptrick = 1;
            }
            int p = labelend_[b];
            while (j != 0) {
                label_[endpoint_[p ^ 1]] = 0;
                label_[endpoint_[ep[wrap(j - endptrick, ep.size())] ^ endptrick ^ 1]] = 0;
                assign_label(endpoint_[p ^ 1], 2, p);
                allowedge_[ep[wrap(j - endptrick, ep.size())] / 2] = 1;
                j += jstep;
                p = ep[wrap(j - endptrick, ep.size())] ^ endptrick;
                allowedge_[p / 2] = 1;
                j += jstep;
            }
            int bv = ch[wrap(j, ch.size())];
            label_[endpoint_[p ^ 1]] = label_[bv] = 2;
            labelend_[endpoint_[p ^ 1]] = labelend_[bv] = p;
            bestedge_[bv] = -1;
            j += jstep;
            while (ch[wrap(j, ch.size())] != entrychild) {
                bv = ch[wrap(j, ch.size())];
                if (label_[bv] == 1) {
                    j += jstep;
                    continue;
                }
                int v = -1;
                for (int leaf : leaves(bv)) {
                    v = leaf;
                    if (label_[leaf] != 0) break;
                }
                if (label_[v] != 0) {
                    assert(label_[v] == 2);
                    assert(inblossom_[v] == bv);
                    label_[v] = 0;
                    label_[endpoint_[mate_[blossombase_[bv]]]] = 0;
                    assign_label(v, 2, labelend_[v]);
                }
                j += jstep;
            }
        }
        label_[b] = labelend_[b] = -1;
        blossomchilds_[b].clear();
        blossomendps_[b].clear();
        blossombase_[b] = -1;
        blossombestedges_[b].reset();
        bestedge_[b] = -1;
        unusedblossoms_.push_back(b);
    }

    void augment_blossom(int b, int v) {
        int t = v;
        while (blossomparent_[t] != b) t = blossomparent_[t];
        if (t >= n_) augment_blossom(t, v);
        auto& ch = blossomchilds_[b];
        auto& ep = blossomendps_[b];
        const int i = static_cast<int>(std::find(ch.begin(), ch.end(), t) - ch.begin());
        int j = i;
        int jstep = 0;
        int endptrick = 0;
        if (i & 1) {
            j -= static_cast<int>(ch.size());
            jstep = 1;
            endptrick = 0;
        } else {
            jstep = -1;
            endptrick = 1;
        }
        while (j != 0) {
            j += jstep;
            t = ch[wrap(j, ch.size())];
            const int p = ep[wrap(j - endptrick, ep.size())] ^ endptrick;
            if (t >= n_) augment_blossom(t, endpoint_[p]);
            j += jstep;
            t = ch[wrap(j, ch.size())];
            if (t >= n_) augment_blossom(t, endpoint_[p ^ 1]);
            mate_[endpoint_[p]] = p ^ 1;
            mate_[endpoint_[p ^ 1]] = p;
        }
        std::rotate(ch.begin(), ch.begin() + i, ch.end());
        std::rotate(ep.begin(), ep.begin() + i, ep.end());
        blossombase_[b] = blossombase_[ch[0]];
        assert(blossombase_[b] == v);
    }

    void augment_matching(int k) {
        const int v = edges_[k].u;
        const int w = edges_[k].v;
        const int starts[2][2] = {{v, 2 * k + 1}, {w, 2 * k}};
        for (const auto& start : starts) {
            int s = start[0];
            int p = start[1];
            while (true) {
                const int bs = inblossom_[s];
                assert(label_[bs] == 1);
                assert(labelend_[bs] == mate_[blossombase_[bs]]);
                if (bs >= n_) augment_blossom(bs, s);
                mate_[s] = p;
                if (labelend_[bs] == -1) break;
                const int t = endpoint_[labelend_[bs]];
                const int bt = inblossom_[t];
                assert(label_[bt] == 2);
                assert(labelend_[bt] >= 0);
                s = endpoint_[labelend_[bt]];
                const int j = endpoint_[labelend_[bt] ^ 1];
                assert(blossombase_[bt] == t);
                if (bt >= n_) augment_blossom(bt, j);
                mate_[j] = labelend_[bt];
                p = labelend_[bt] ^ 1;
            }
        }
    }

    void run() {
        for (int stage = 0; stage < n_; ++stage) {
            std::fill(label_.begin(), label_.end(), 0);
            std::fill(bestedge_.begin(), bestedge_.end(), -1);
            for (int b = n_; b < 2 * n_; ++b) blossombestedges_[b].reset();
            std::fill(allowedge_.begin(), allowedge_.end(), 0);
            queue_.clear();
            for (int v = 0; v < n_; ++v)
                if (mate_[v] == -1 && label_[inblossom_[v]] == 0) assign_label(v, 1, -1);

            bool augmented = false;
            while (true) {
                while (!queue_.empty() && !augmented) {
                    const int v = queue_.back();
                    queue_.pop_back();
                    assert(label_[inblossom_[v]] == 1);
                    for (int p : neighbend_[v]) {
                        const int k = p / 2;
                        const int w = endpoint_[p];
                        if (inblossom_[v] == inblossom_[w]) continue;
                        W kslack{};
                        if (!allowedge_[k]) {
                            kslack = slack(k);
                            if (kslack <= W{}) allowedge_[k] = 1;
                        }
                        if (allowedge_[k]) {
                            if (label_[inblossom_[w]] == 0) {
                                assign_label(w, 2, p ^ 1);
                            } else if (label_[inblossom_[w]] == 1) {
                                const int base = scan_blossom(v, w);
                                if (base >= 0) {
                                    add_blossom(base, k);
                                } else {
                                    augment_matching(k);
                                    augmented = true;
                                    break;
                                }
                            } else if (label_[w] == 0) {
                                assert(label_[inblossom_[w]] == 2);
                                label_[w] = 2;
                                labelend_[w] = p ^ 1;
                            }
                        } else if (label_[inblossom_[w]] == 1) {
                            const int b = inblossom_[v];
                            if (bestedge_[b] == -1 || kslack < slack(bestedge_[b])) bestedge_[b] = k;
                        } else if (label_[w] == 0) {
                            if (bestedge_[w] == -1 || kslack < slack(bestedge_[w])) bestedge_[w] = k;
                        }
                    }
                }
                if (augmented) break;

                int deltatype = 1;
                W delta = dualvar_[0];
                for (int v = 1; v < n_; ++v)
                    if (dualvar_[v] < delta) delta = dualvar_[v];
                int deltaedge = -1;
                int deltablossom = -1;
                for (int v = 0; v < n_; ++v) {
                    if (label_[inblossom_[v]] == 0 && bestedge_[v] != -1) {
                        W d = slack(bestedge_[v]);
                        if (d < delta) {
                            delta = d;
                            deltatype = 2;
                            deltaedge = bestedge_[v];
                        }
                    }
                }
                for (int b = 0; b < 2 * n_; ++b) {
                    if (blossomparent_[b] == -1 && label_[b] == 1 && bestedge_[b] != -1) {
                        W d = half(slack(bestedge_[b]));
                        if (d < delta) {
                            delta = d;
                            deltatype = 3;
                            deltaedge = bestedge_[b];
                        }
                    }
                }
                for (int b = n_; b < 2 * n_; ++b) {
                    if (blossombase_[b] >= 0 && blossomparent_[b] == -1 && label_[b] == 2 && dualvar_[b] < delta) {
                        delta = dualvar_[b];
                        deltatype = 4;
                        deltablossom = b;
                    }
                }

                for (int v = 0; v < n_; ++v) {
                    if (label_[inblossom_[v]] == 1)
                        dualvar_[v] = dualvar_[v] - delta;
                    else if (label_[inblossom_[v]] == 2)
                        dualvar_[v] = dualvar_[v] + delta;
                }
                for (int b = n_; b < 2 * n_; ++b) {
                    if (blossombase_[b] >= 0 && blossomparent_[b] == -1) {
                        if (label_[b] == 1)
                            dualvar_[b] = dualvar_[b] + delta;
                        else if (label_[b] == 2)
                            dualvar_[b] = dualvar_[b] - delta;
                    }
                }

                if (deltatype == 1) break;
                if (deltatype == 2) {
                    allowedge_[deltaedge] = 1;
                    int i = edges_[deltaedge].u;
                    int j = edges_[deltaedge].v;
                    if (label_[inblossom_[i]] == 0) std::swap(i, j);
                    assert(label_[inblossom_[i]] == 1);
                    queue_.push_back(i);
                } else if (deltatype == 3) {
                    allowedge_[deltaedge] = 1;
                    const int i = edges_[deltaedge].u;
                    assert(label_[inblossom_[i]] == 1);
                    queue_.push_back(i);
                } else {
                    expand_blossom(deltablossom, false);
                }
            }
            if (!augmented) break;
            for (int b = n_; b < 2 * n_; ++b)
                if (blossomparent_[b] == -1 && blossombase_[b] >= 0 && label_[b] == 1 && dualvar_[b] == W{})
                    expand_blossom(b, true);
        }
    }
};

}  // namespace matchvote::detail
