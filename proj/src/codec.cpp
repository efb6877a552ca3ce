#include "diffharm/codec.hpp"

#include <string>

#include "diffharm/common.hpp"

namespace diffharm {

LinearPoolCodec::LinearPoolCodec(int factor) : factor_(factor) {
    if (factor < 2) {
        throw ConfigError("LinearPoolCodec: factor must be >= 2, got " +
                          std::to_string(factor));
    }
}

Shape LinearPoolCodec::latent_shape(const Shape& pixel) const {
    if (pixel.height % factor_ != 0 || pixel.width % factor_ != 0) {
        throw ShapeError("LinearPoolCodec: dimensions " + pixel.str() +
                         " not divisible by factor " +
                         std::to_string(factor_));
    }
    return {pixel.height / factor_, pixel.width / factor_, pixel.channels};
}

Tensor LinearPoolCodec::encode(const Tensor& x) const {
    const Shape ls = latent_shape(x.shape);
    Tensor h(ls);
    const double inv = 1.0 / (static_cast<double>(factor_) * factor_);
    for (int y = 0; y < ls.height; ++y) {
        for (int xx = 0; xx < ls.width; ++xx) {
            for (int c = 0; c < ls.channels; ++c) {
                double acc = 0.0;
                for (int dy = 0; dy < factor_; ++dy)
                    for (int dx = 0; dx < factor_; ++dx)
                        acc += x.at(y * factor_ + dy, xx * factor_ + dx, c);
                h.at(y, xx, c) = acc * inv;
            }
        }
    }
    return h;
}

Tensor LinearPoolCodec::decode(const Tensor& h) const {
    Shape ps{h.shape.height * factor_, h.shape.width * factor_,
             h.shape.channels};
    Tensor x(ps);
    for (int y = 0; y < ps.height; ++y) {
        for (int xx = 0; xx < ps.width; ++xx) {
            for (int c = 0; c < ps.channels; ++c) {
                x.at(y, xx, c) = h.at(y / factor_, xx / factor_, c);
            }
        }
    }
    return x;
}

Tensor LinearPoolCodec::decode_vjp(const Tensor& h, const Tensor& g) const {
    if (g.shape.height != h.shape.height * factor_ ||
        g.shape.width != h.shape.width * factor_ ||
        g.shape.channels != h.shape.channels) {
        throw ShapeError("LinearPoolCodec::decode_vjp: gradient shape " +
                         g.shape.str() + " does not match decode(" +
                         h.shape.str() + ")");
    }
    // Adjoint of nearest-neighbor upsampling: sum each block.
    Tensor out(h.shape, 0.0);
    for (int y = 0; y < g.shape.height; ++y) {
        for (int xx = 0; xx < g.shape.width; ++xx) {
            for (int c = 0; c < g.shape.channels; ++c) {
                out.at(y / factor_, xx / factor_, c) += g.at(y, xx, c);
            }
        }
    }
    return out;
}

std::string LinearPoolCodec::name() const {
    return "pool" + std::to_string(factor_);
}

std::unique_ptr<LatentCodec> make_codec(const std::string& kind, int factor) {
    if (kind == "identity") return std::make_unique<IdentityCodec>();
    if (kind == "pool") return std::make_unique<LinearPoolCodec>(factor);
    throw ConfigError("codec: unknown kind '" + kind +
                      "' (accepted: identity, pool)");
}

} // namespace diffharm
