import numpy as np

class IntegerMatrix(object):
    '''Exact integer matrix backed by a numpy object array.

    Parameters
    ----------
    entries : nested list or array of int
        the entry grid; a ``(rows, cols)`` shape is required
    rows, cols : int, optional
        only used for empty grids, where the shape cannot be read from the entries
    '''
    def __init__(self, entries, rows=None, cols=None):
        A = np.array(entries, dtype=object)
        if A.size==0:
            A = np.zeros((rows or 0, cols or 0), dtype=object)
        if A.ndim!=2:
            raise ValueError(f'an IntegerMatrix needs a 2d entry grid, got ndim={A.ndim}')
        if rows is not None and A.shape[0]!=rows:
            raise ValueError(f'expected {rows} rows, got {A.shape[0]}')
        if cols is not None and A.shape[1]!=cols:
            raise ValueError(f'expected {cols} cols, got {A.shape[1]}')
        for a in A.flat:
            if not isinstance(a, (int, np.integer)) or isinstance(a, bool):
                raise ValueError(f'IntegerMatrix entries must be integers, got {a!r}')
        self.entries = np.vectorize(int, otypes=[object])(A) if A.size else A

    @classmethod
    def identity(cls, n):
        return cls([[int(i==j) for j in range(n)] for i in range(n)], rows=n, cols=n)

    @classmethod
    def zeros(cls, rows, cols):
        return cls([[0]*cols for _ in range(rows)], rows=rows, cols=cols)

    @property
    def rows(self):
        return self.entries.shape[0]

    @property
    def cols(self):
        return self.entries.shape[1]

    @property
    def shape(self):
        return self.entries.shape

    def __getitem__(self, ij):
        return self.entries[ij]

    def __matmul__(self, other):
        assert self.cols==other.rows, f'shape mismatch {self.shape} @ {other.shape}'
        if self.rows==0 or other.cols==0 or self.cols==0:
            return IntegerMatrix.zeros(self.rows, other.cols)
        return IntegerMatrix(self.entries.dot(other.entries), rows=self.rows, cols=other.cols)

    def __eq__(self, other):
        return isinstance(other, IntegerMatrix) and self.shape==other.shape and self.to_list()==other.to_list()

    def to_list(self):
        return [[int(a) for a in row] for row in self.entries]

    def is_diagonal(self):
        return all(self.entries[i,j]==0 for i in range(self.rows) for j in range(self.cols) if i!=j)

    def __repr__(self):
        return f'IntegerMatrix({self.to_list()})'

def _pivot(A, t):
    '''Position of the nonzero entry of A[t:,t:] with the smallest absolute value, lowest (row, col) first.'''
    best = None
    for i in range(t, A.shape[0]):
        for j in range(t, A.shape[1]):
            a = A[i,j]
            if a!=0 and (best is None or abs(a)<abs(A[best])):
                best = (i,j)
    return best

def smith_normal_form(m):
    '''Smith normal form of an integer matrix.

    Parameters
    ----------
    m : IntegerMatrix or nested list of int

    Returns
    -------
    diagonal : list of int
        d_1 | d_2 | ... | d_k with k = min(rows, cols), all d_i >= 0
    left, right : IntegerMatrix
        unimodular matrices with ``left @ m @ right`` diagonal

    Notes
    -----
    The pivot is always the smallest nonzero entry in absolute value (ties go to
    the lowest (row, col)), so the transforms are deterministic.
    '''
    if not isinstance(m, IntegerMatrix):
        m = IntegerMatrix(m)
    A = m.entries.copy()
    nrow, ncol = A.shape
    L = IntegerMatrix.identity(nrow).entries.copy()
    R = IntegerMatrix.identity(ncol).entries.copy()

    for t in range(min(nrow, ncol)):
        while True:
            piv = _pivot(A, t)
            if piv is None:
                break
            i, j = piv
            if i!=t:
                A[[t,i],:] = A[[i,t],:]
                L[[t,i],:] = L[[i,t],:]
            if j!=t:
                A[:,[t,j]] = A[:,[j,t]]
                R[:,[t,j]] = R[:,[j,t]]
            p = A[t,t]
            clean = True
            for i in range(t+1, nrow):
                q = A[i,t]//p
                if q!=0:
                    A[i,:] = A[i,:] - q*A[t,:]
                    L[i,:] = L[i,:] - q*L[t,:]
                clean = clean and A[i,t]==0
            for j in range(t+1, ncol):
                q = A[t,j]//p
                if q!=0:
                    A[:,j] = A[:,j] - q*A[:,t]
                    R[:,j] = R[:,j] - q*R[:,t]
                clean = clean and A[t,j]==0
            if not clean:
                continue
            bad = next(((i,j) for i in range(t+1, nrow) for j in range(t+1, ncol) if A[i,j]%p!=0), None)
            if bad is None:
                break
            A[t,:] = A[t,:] + A[bad[0],:] #pulls the offending entry into row t
            L[t,:] = L[t,:] + L[bad[0],:]
        if A[t,t]<0:
            A[t,:] = -A[t,:]
            L[t,:] = -L[t,:]

    diagonal = [int(A[k,k]) for k in range(min(nrow, ncol))]
    return diagonal, IntegerMatrix(L, rows=nrow, cols=nrow), IntegerMatrix(R, rows=ncol, cols=ncol)
