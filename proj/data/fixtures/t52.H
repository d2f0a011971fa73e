1+q*t+q^2*t^2+a*(q+q^2*t)
