#ifndef DIFFHARM_CODEC_HPP
#define DIFFHARM_CODEC_HPP

#include <memory>
#include <string>

#include "diffharm/tensor.hpp"

namespace diffharm {

// Latent encoder/decoder pair. decode_vjp is the exact adjoint of decode,
// used to pull pixel-space guidance gradients back to latent space.
class LatentCodec {
public:
    virtual ~LatentCodec() = default;

    virtual Tensor encode(const Tensor& x) const = 0;
    virtual Tensor decode(const Tensor& h) const = 0;
    virtual Tensor decode_vjp(const Tensor& h, const Tensor& g) const = 0;
    virtual Shape latent_shape(const Shape& pixel) const = 0;
    virtual std::string name() const = 0;
};

class IdentityCodec final : public LatentCodec {
public:
    Tensor encode(const Tensor& x) const override { return x; }
    Tensor decode(const Tensor& h) const override { return h; }
    Tensor decode_vjp(const Tensor&, const Tensor& g) const override {
        return g;
    }
    Shape latent_shape(const Shape& pixel) const override { return pixel; }
    std::string name() const override { return "identity"; }
};

// encode = factor x factor average pooling, decode = nearest-neighbor
// upsampling. Both linear; decode round trip loses within-block detail,
// which is the reconstruction loss color transfer has to repair.
class LinearPoolCodec final : public LatentCodec {
public:
    explicit LinearPoolCodec(int factor);

    Tensor encode(const Tensor& x) const override;
    Tensor decode(const Tensor& h) const override;
    Tensor decode_vjp(const Tensor& h, const Tensor& g) const override;
    Shape latent_shape(const Shape& pixel) const override;
    std::string name() const override;

    int factor() const { return factor_; }

private:
    int factor_;
};

std::unique_ptr<LatentCodec> make_codec(const std::string& kind, int factor);

} // namespace diffharm

#endif
