1 - t + q*t + q^2*t - q*t^2 + q^2*t^2 - q^2*t^3 + q^3*t^3 + a^2*q^3 +a*(q + q^2 - q*t + q^2*t + q^3*t - q^2*t^2 + q^3*t^2)
