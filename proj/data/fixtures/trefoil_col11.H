1+a^2*q^2*t^(-1)+q*t+q*t^2+q^2*t^4+a*(q+q*t^(-1)+q^2*t+q^2*t^2)
