1-t+q*t-q*t^2+q^2*t^2+a*(q-q*t+q^2*t)
